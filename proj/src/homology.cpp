#include "homology.hpp"

#include <algorithm>

namespace torelli {

IntersectionForm IntersectionForm::standard(std::size_t pairs) {
    IntersectionForm f;
    f.gram = IntMat(2 * pairs, 2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        f.gram.at(i, pairs + i) = 1;
        f.gram.at(pairs + i, i) = -1;
    }
    return f;
}

Int pairing(const IntersectionForm& f, const Vec& u, const Vec& v) {
    if (u.size() != f.rank() || v.size() != f.rank())
        throw input_error("pairing: vector rank does not match the form");
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) s += u[i] * f.gram.at(i, j) * v[j];
    }
    return s;
}

Vec transvection_apply(const IntersectionForm& f, const Vec& v, const Vec& c) {
    return vec_add(v, vec_scale(c, pairing(f, v, c)));
}

IntMat transvection_power(const IntersectionForm& f, const Vec& c, int e) {
    if (e != 1 && e != -1) throw input_error("transvection_power: exponent must be +-1");
    if (c.size() != f.rank()) throw input_error("transvection: vector rank does not match the form");
    if (vec_is_zero(c)) throw input_error("transvection along the zero vector");
    const std::size_t n = f.rank();
    IntMat m = IntMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec e_k(n);
        e_k[k] = 1;
        Int p = pairing(f, e_k, c) * e;
        if (p == 0) continue;
        for (std::size_t i = 0; i < n; ++i) m.at(i, k) += p * c[i];
    }
    return m;
}

IntMat transvection_matrix(const IntersectionForm& f, const Vec& c) {
    return transvection_power(f, c, 1);
}

bool sp_membership(const IntersectionForm& f, const IntMat& m) {
    if (m.rows != f.rank() || m.cols != f.rank())
        throw input_error("sp_membership: matrix rank does not match the form");
    return mat_mul(mat_mul(mat_transpose(m), f.gram), m) == f.gram;
}

bool stabilizer_membership(const IntersectionForm& f, const IntMat& m, const Vec& v) {
    if (v.size() != f.rank()) throw input_error("stabilizer_membership: vector rank mismatch");
    return sp_membership(f, m) && mat_vec(m, v) == v;
}

Sublattice::Sublattice(const IntersectionForm& f, std::vector<Vec> gens) : generators(std::move(gens)) {
    for (const Vec& g : generators)
        if (g.size() != f.rank()) throw input_error("sublattice generator rank mismatch");
    if (rank_of_rows(generators) != generators.size())
        throw input_error("sublattice generators are linearly dependent");
}

std::vector<Vec> radical(const IntersectionForm& f, const Sublattice& l) {
    const std::size_t m = l.generators.size();
    IntMat gram(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) gram.at(i, j) = pairing(f, l.generators[i], l.generators[j]);
    std::vector<Vec> out;
    for (const Vec& k : kernel_basis(gram)) {
        Vec v(f.rank());
        for (std::size_t i = 0; i < m; ++i)
            if (k[i] != 0) v = vec_add(v, vec_scale(l.generators[i], k[i]));
        out.push_back(primitive(std::move(v)));
    }
    return out;
}

SymplecticBasisResult symplectic_reduce(const IntersectionForm& f, std::vector<Vec> gens) {
    SymplecticBasisResult res;
    std::vector<Vec> work = std::move(gens);
    for (;;) {
        // first (i, j) with pairing +-1
        std::size_t pi = work.size(), pj = work.size();
        bool nonzero_left = false;
        for (std::size_t i = 0; i < work.size() && pi == work.size(); ++i)
            for (std::size_t j = i + 1; j < work.size(); ++j) {
                Int p = pairing(f, work[i], work[j]);
                if (p != 0) nonzero_left = true;
                if (p == 1 || p == -1) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        if (pi == work.size()) {
            if (nonzero_left)
                throw input_error("non-unimodular sublattice");
            break;
        }
        Vec z = work[pi], w = work[pj];
        if (pairing(f, z, w) < 0) std::swap(z, w);
        std::vector<Vec> next;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == pi || i == pj) continue;
            // v - <v,w> z + <v,z> w kills both pairings
            Vec v = work[i];
            v = vec_sub(v, vec_scale(z, pairing(f, v, w)));
            v = vec_add(v, vec_scale(w, pairing(f, v, z)));
            next.push_back(std::move(v));
        }
        res.pairs.emplace_back(std::move(z), std::move(w));
        work = std::move(next);
    }
    IntEchelon indep;
    for (Vec& v : work) {
        if (vec_is_zero(v)) continue;
        Vec p = primitive(std::move(v));
        if (indep.insert(p)) res.radical_basis.push_back(std::move(p));
    }
    return res;
}

SymplecticBasisResult symplectic_gram_schmidt(const IntersectionForm& f, const Sublattice& l) {
    return symplectic_reduce(f, l.generators);
}

}  // namespace torelli
