#include "pie/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace pie {

int chain_complex_q::dim_at(int degree) const {
    const int i = degree - lowest_degree;
    if (i < 0 || i >= terms()) return 0;
    return dims[i];
}

const qmatrix* chain_complex_q::boundary_from(int degree) const {
    const int i = degree - lowest_degree;
    if (i <= 0 || i >= terms()) return nullptr;
    return &boundary[i];
}

chain_complex_q chain_complex(const nerve_complex& n) {
    chain_complex_q c;
    c.lowest_degree = 0;
    const int top = n.dim();
    if (top < 0) return c;

    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int d = 0; d <= top; ++d) {
        c.dims.push_back(static_cast<int>(n.simplices[d].size()));
        c.labels.emplace_back();
        for (size_t i = 0; i < n.simplices[d].size(); ++i) {
            index[d][n.simplices[d][i]] = static_cast<int>(i);
            c.labels.back().push_back(n.label(d, static_cast<int>(i)));
        }
    }
    c.boundary.resize(top + 1);
    c.boundary[0] = qmatrix(0, c.dims[0]);
    for (int d = 1; d <= top; ++d) {
        qmatrix m(c.dims[d - 1], c.dims[d]);
        for (int j = 0; j < c.dims[d]; ++j) {
            const std::vector<int>& chain = n.simplices[d][j];
            std::vector<int> face(chain.size() - 1);
            for (size_t drop = 0; drop < chain.size(); ++drop) {
                size_t t = 0;
                for (size_t k = 0; k < chain.size(); ++k)
                    if (k != drop) face[t++] = chain[k];
                const int row = index[d - 1].at(face);
                m.at(row, j) += (drop % 2 == 0) ? 1 : -1;
            }
        }
        c.boundary[d] = std::move(m);
    }
    if (!verify_complex(c)) throw std::logic_error("chain_complex: boundary check failed");
    return c;
}

bool verify_complex(const chain_complex_q& c) {
    for (int i = 0; i < c.terms(); ++i) {
        if (c.boundary[i].cols() != c.dims[i]) return false;
        if (i > 0 && c.boundary[i].rows() != c.dims[i - 1]) return false;
        if (i + 1 < c.terms() && !(c.boundary[i] * c.boundary[i + 1]).is_zero()) return false;
    }
    return true;
}

chain_complex_q augmented(const chain_complex_q& c) {
    if (c.terms() == 0) {
        chain_complex_q a;
        a.lowest_degree = -1;
        a.dims = {1};
        a.boundary = {qmatrix(0, 1)};
        a.labels = {{"()"}};
        return a;
    }
    if (c.lowest_degree != 0) throw std::invalid_argument("augmented: complex must start in degree 0");
    chain_complex_q a;
    a.lowest_degree = -1;
    a.dims.push_back(1);
    a.dims.insert(a.dims.end(), c.dims.begin(), c.dims.end());
    a.boundary.push_back(qmatrix(0, 1));
    qmatrix aug(1, c.dims[0]);
    for (int j = 0; j < c.dims[0]; ++j) aug.at(0, j) = 1;
    a.boundary.push_back(std::move(aug));
    for (int i = 1; i < c.terms(); ++i) a.boundary.push_back(c.boundary[i]);
    a.labels.push_back({"()"});
    for (const auto& l : c.labels) a.labels.push_back(l);
    return a;
}

std::map<int, long long> betti(const chain_complex_q& c, bool reduced) {
    const chain_complex_q* use = &c;
    chain_complex_q aug;
    if (reduced) {
        aug = augmented(c);
        use = &aug;
    }
    std::map<int, long long> out;
    std::vector<long long> ranks(use->terms() + 1, 0);
    for (int i = 1; i < use->terms(); ++i) ranks[i] = rank(use->boundary[i]);
    for (int i = 0; i < use->terms(); ++i) {
        const long long b = use->dims[i] - ranks[i] - ranks[i + 1];
        if (b != 0) out[use->lowest_degree + i] = b;
    }
    return out;
}

homology_space homology_basis(const chain_complex_q& c, int degree) {
    homology_space h;
    const int n = c.dim_at(degree);
    h.span = column_space(n);
    if (n == 0) return h;

    const qmatrix* into = c.boundary_from(degree + 1);
    if (into)
        for (int j = 0; j < into->cols(); ++j) h.span.add(into->col(j));
    h.boundary_rank = h.span.rank();

    const qmatrix* out = c.boundary_from(degree);
    qmatrix cycles = out ? kernel_basis(*out) : qmatrix::identity(n);
    for (int j = 0; j < cycles.cols(); ++j) {
        std::vector<rat> v = cycles.col(j);
        if (h.span.add(v)) h.reps.push_back(std::move(v));
    }
    return h;
}

induced_map_result induced_map(const finite_poset& from, const finite_poset& to,
                               const std::map<std::string, std::string>& f, bool reduced) {
    std::vector<int> image(from.size(), -1);
    for (int i = 0; i < from.size(); ++i) {
        auto it = f.find(from.id(i));
        if (it == f.end()) throw std::invalid_argument("induced_map: map misses " + from.id(i));
        image[i] = to.index_of(it->second);
        if (image[i] < 0) throw std::invalid_argument("induced_map: unknown target id " + it->second);
    }
    for (int a = 0; a < from.size(); ++a)
        for (int b = 0; b < from.size(); ++b)
            if (from.leq(a, b) && !to.leq(image[a], image[b]))
                throw std::invalid_argument("induced_map: map is not order preserving");

    const nerve_complex ns = nerve(from);
    const nerve_complex nt = nerve(to);
    chain_complex_q cs = chain_complex(ns);
    chain_complex_q ct = chain_complex(nt);

    std::vector<std::map<std::vector<int>, int>> target_index(std::max(nt.dim() + 1, 0));
    for (int d = 0; d <= nt.dim(); ++d)
        for (size_t i = 0; i < nt.simplices[d].size(); ++i)
            target_index[d][nt.simplices[d][i]] = static_cast<int>(i);

    // F[d]: C_d(source) -> C_d(target); repeated vertices send a chain to 0
    std::vector<qmatrix> F(std::max(ns.dim() + 1, 0));
    for (int d = 0; d <= ns.dim(); ++d) {
        F[d] = qmatrix(ct.dim_at(d), cs.dim_at(d));
        for (size_t j = 0; j < ns.simplices[d].size(); ++j) {
            std::vector<int> img;
            for (int v : ns.simplices[d][j]) img.push_back(image[v]);
            bool degenerate = false;
            for (size_t k = 1; k < img.size(); ++k)
                if (img[k] == img[k - 1]) degenerate = true;
            if (degenerate) continue;
            if (d < static_cast<int>(target_index.size())) {
                auto it = target_index[d].find(img);
                if (it == target_index[d].end())
                    throw std::logic_error("induced_map: image chain missing from target nerve");
                F[d].at(it->second, static_cast<int>(j)) = 1;
            }
        }
    }

    induced_map_result res;
    res.chain_map_ok = true;
    for (int d = 1; d <= ns.dim(); ++d) {
        const qmatrix lhs = F[d - 1] * cs.boundary[d];
        const qmatrix rhs = (d <= nt.dim() ? ct.boundary[d] * F[d] : qmatrix(ct.dim_at(d - 1), cs.dim_at(d)));
        if (!(lhs == rhs)) res.chain_map_ok = false;
    }

    if (reduced) {
        cs = augmented(cs);
        ct = augmented(ct);
        qmatrix id1(1, 1);
        id1.at(0, 0) = 1;
        F.insert(F.begin(), id1);
    }
    res.source_betti = betti(reduced ? chain_complex(ns) : cs, reduced);
    res.target_betti = betti(reduced ? chain_complex(nt) : ct, reduced);

    for (int d = cs.lowest_degree; d <= cs.top_degree(); ++d) {
        homology_space hs = homology_basis(cs, d);
        if (hs.reps.empty()) continue;
        homology_space ht = homology_basis(ct, d);
        qmatrix act(static_cast<int>(ht.reps.size()), static_cast<int>(hs.reps.size()));
        const qmatrix& Fd = F[d - cs.lowest_degree];
        for (size_t j = 0; j < hs.reps.size(); ++j) {
            std::vector<rat> img = Fd.apply(hs.reps[j]);
            auto coords = ht.span.coordinates(img);
            if (!coords) throw std::logic_error("induced_map: image is not a cycle modulo boundaries");
            for (size_t i = 0; i < ht.reps.size(); ++i)
                act.at(static_cast<int>(i), static_cast<int>(j)) = (*coords)[ht.boundary_rank + i];
        }
        res.homology_action[d] = std::move(act);
    }
    return res;
}

}
