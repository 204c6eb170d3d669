#include "pie/lpoly.hpp"

#include <stdexcept>

namespace pie {

int lpoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("lpoly: zero polynomial has no exponents");
    return c_.begin()->first;
}

int lpoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("lpoly: zero polynomial has no exponents");
    return c_.rbegin()->first;
}

lpoly& lpoly::operator+=(const lpoly& o) {
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

lpoly& lpoly::operator-=(const lpoly& o) {
    for (const auto& [e, v] : o.c_) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_[e] = -v;
        } else {
            it->second -= v;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

lpoly operator*(const lpoly& a, const lpoly& b) {
    lpoly out;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) {
            auto& slot = out.c_[ea + eb];
            slot += va * vb;
        }
    for (auto it = out.c_.begin(); it != out.c_.end();)
        it = it->second == 0 ? out.c_.erase(it) : std::next(it);
    return out;
}

lpoly lpoly::operator-() const {
    lpoly out;
    for (const auto& [e, v] : c_) out.c_[e] = -v;
    return out;
}

bigint lpoly::eval_int(const bigint& q) const {
    bigint out = 0;
    for (const auto& [e, v] : c_) {
        if (e < 0) throw std::invalid_argument("lpoly::eval_int: negative exponent");
        out += v * pow_bigint(q, e);
    }
    return out;
}

rat lpoly::eval_rat(const rat& q) const {
    if (q == 0) throw std::invalid_argument("lpoly::eval_rat: zero base");
    rat out = 0;
    for (const auto& [e, v] : c_) {
        rat p = 1;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= q;
        if (e < 0) p = rat(1) / p;
        out += rat(v) * p;
    }
    return out;
}

std::string lpoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [e, v] : c_) {
        const bool first = s.empty();
        const bigint a = abs(v);
        if (v < 0)
            s += first ? "-" : " - ";
        else if (!first)
            s += " + ";
        std::string mono;
        if (e == 0)
            mono = a.str();
        else {
            if (a != 1) mono = a.str() + "*";
            mono += "L";
            if (e != 1) mono += "^" + std::to_string(e);
        }
        s += mono;
    }
    return s;
}

nlohmann::json lpoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, v] : c_) j[std::to_string(e)] = v.str();
    return j;
}

lpoly lpoly::from_json(const nlohmann::json& j) {
    lpoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const int e = std::stoi(it.key());
        bigint v(it.value().is_string() ? bigint(it.value().get<std::string>())
                                        : bigint(it.value().get<long long>()));
        p.set(e, std::move(v));
    }
    return p;
}

}
