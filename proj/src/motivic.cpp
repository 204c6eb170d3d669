#include "pie/motivic.hpp"

#include <algorithm>
#include <functional>

namespace pie {

int cellular_variety::dim() const {
    if (cells.empty()) throw std::logic_error("cellular_variety: no cells");
    return *std::max_element(cells.begin(), cells.end());
}

lpoly cellular_variety::class_of() const {
    if (cells.empty()) throw std::logic_error("cellular_variety: no cells");
    lpoly c;
    for (int a : cells) c += lpoly::monomial(a);
    return c;
}

cellular_variety variety_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("type", "") != "cellular" || !j.contains("cells") ||
        !j["cells"].is_array() || j["cells"].empty())
        throw std::invalid_argument("variety_from_json: need {\"type\":\"cellular\",\"cells\":[...]}");
    cellular_variety x;
    for (const auto& c : j["cells"]) {
        if (!c.is_number_integer() || c.get<long long>() < 0)
            throw std::invalid_argument("variety_from_json: cells are nonnegative integers");
        x.cells.push_back(c.get<int>());
    }
    std::sort(x.cells.begin(), x.cells.end());
    return x;
}

nlohmann::json variety_to_json(const cellular_variety& x) {
    return {{"type", "cellular"}, {"cells", x.cells}};
}

mot_series mot_series::one(int trunc) {
    if (trunc < 0) throw std::invalid_argument("mot_series: negative truncation");
    mot_series s;
    s.trunc = trunc;
    s.coeff.assign(static_cast<size_t>(trunc) + 1, lpoly());
    s.coeff[0] = lpoly(1);
    return s;
}

const lpoly& mot_series::at(int k) const {
    if (k < 0 || k > trunc) throw std::out_of_range("mot_series: index past truncation");
    return coeff[static_cast<size_t>(k)];
}

namespace {

void require_valid(const mot_series& s) {
    if (s.trunc < 0 || s.coeff.size() != static_cast<size_t>(s.trunc) + 1)
        throw std::invalid_argument("mot_series: malformed");
}

}  // namespace

mot_series operator+(const mot_series& a, const mot_series& b) {
    require_valid(a);
    require_valid(b);
    mot_series r = mot_series::one(std::min(a.trunc, b.trunc));
    for (int k = 0; k <= r.trunc; ++k) r.coeff[k] = a.at(k) + b.at(k);
    return r;
}

mot_series operator*(const mot_series& a, const mot_series& b) {
    require_valid(a);
    require_valid(b);
    mot_series r = mot_series::one(std::min(a.trunc, b.trunc));
    for (int k = 0; k <= r.trunc; ++k) {
        lpoly c;
        for (int j = 0; j <= k; ++j) c += a.at(j) * b.at(k - j);
        r.coeff[k] = std::move(c);
    }
    return r;
}

mot_series truncate(const mot_series& s, int new_trunc) {
    require_valid(s);
    if (new_trunc < 0 || new_trunc > s.trunc)
        throw std::invalid_argument("truncate: can only lower the truncation");
    mot_series r = s;
    r.trunc = new_trunc;
    r.coeff.resize(static_cast<size_t>(new_trunc) + 1);
    return r;
}

mot_series scale_t(const mot_series& s, int e) {
    require_valid(s);
    mot_series r = s;
    for (int k = 0; k <= r.trunc; ++k) r.coeff[k] = r.coeff[k] * lpoly::monomial(e * k);
    return r;
}

mot_series substitute_power(const mot_series& s, int m) {
    require_valid(s);
    if (m < 1) throw std::invalid_argument("substitute_power: power must be >= 1");
    mot_series r = mot_series::one(m * (s.trunc + 1) - 1);
    r.coeff[0] = s.at(0);
    for (int k = 1; k <= s.trunc; ++k) r.coeff[static_cast<size_t>(m) * k] = s.at(k);
    return r;
}

mot_series invert(const mot_series& s) {
    require_valid(s);
    if (!(s.at(0) == lpoly(1))) throw std::invalid_argument("invert: constant term must be 1");
    mot_series r = mot_series::one(s.trunc);
    for (int k = 1; k <= s.trunc; ++k) {
        lpoly acc;
        for (int j = 1; j <= k; ++j) acc += s.at(j) * r.coeff[k - j];
        r.coeff[k] = -acc;
    }
    return r;
}

mot_series kapranov_zeta(const cellular_variety& x, int N) {
    if (N < 0) throw std::invalid_argument("kapranov_zeta: negative truncation");
    if (x.cells.empty()) throw std::invalid_argument("kapranov_zeta: no cells");
    mot_series z = mot_series::one(N);
    for (int a : x.cells) {
        mot_series g = mot_series::one(N);
        for (int k = 1; k <= N; ++k) g.coeff[k] = lpoly::monomial(a * k);
        z = z * g;
    }
    return z;
}

mot_series config_gf(const cellular_variety& x, int N) {
    mot_series z = kapranov_zeta(x, N);
    mot_series z2 = truncate(substitute_power(z, 2), N);
    return z * invert(z2);
}

namespace {

void compositions_of(int k, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (k == 0) {
        emit(cur);
        return;
    }
    for (int a = 1; a <= k; ++a) {
        cur.push_back(a);
        compositions_of(k - a, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

lpoly mu_terms_gamma(const cellular_variety& x, int k) {
    if (k < 1) throw std::invalid_argument("mu_terms_gamma: k must be >= 1");
    mot_series z = kapranov_zeta(x, k);
    lpoly total;
    std::vector<int> cur;
    compositions_of(k, cur, [&](const std::vector<int>& a) {
        lpoly term(a.size() % 2 == 0 ? 1 : -1);
        for (int ai : a) term = term * z.at(ai);
        total += term;
    });
    return total;
}

stable_limit_t stable_limit(const cellular_variety& x, int n, int trunc) {
    if (n < 1) throw std::invalid_argument("stable_limit: n must be >= 1");
    if (trunc < 0) throw std::invalid_argument("stable_limit: negative truncation");
    int d = x.dim();
    if (n <= d)
        throw truncation_error(
            "stable_limit: every degree contributes to bounded powers when n <= dim; "
            "no finite truncation determines them");

    // degree k lands in powers >= k*(n - dim), so only k <= trunc/(n - dim) matter
    int k_max = trunc / (n - d);
    mot_series mu = invert(kapranov_zeta(x, k_max));

    stable_limit_t out;
    out.trunc = trunc;
    lpoly acc;
    for (int k = 0; k <= k_max; ++k)
        for (const auto& [e, c] : mu.at(k).terms()) {
            int upow = n * k - e;
            if (upow >= 0 && upow <= trunc) acc += lpoly::monomial(upow, c);
        }
    out.series = std::move(acc);
    return out;
}

nlohmann::json series_to_json(const mot_series& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeff) coeffs.push_back(c.to_json());
    return {{"N", s.trunc}, {"coefficients", coeffs}};
}

}
