#include "chains.hpp"

#include <algorithm>
#include <sstream>

namespace torelli {

std::string format_chain(const ChainNotation& n) {
    bool compact = std::all_of(n.indices.begin(), n.indices.end(), [](int i) { return i <= 9; });
    std::vector<std::string> parts;
    if (n.beta) parts.push_back("b");
    if (n.gamma3) {
        parts.push_back("2");
        parts.push_back("3'");
    }
    for (int i : n.indices) parts.push_back(std::to_string(i));
    std::ostringstream os;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (!compact && k > 0) os << ',';
        os << parts[k];
    }
    return os.str();
}

ChainNotation parse_chain(const std::string& s) {
    ChainNotation n;
    if (s.empty()) throw input_error("empty chain notation");
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        bool first = true;
        while (std::getline(ss, tok, ',')) {
            if (first && (tok == "b" || tok == "B" || tok == "beta")) {
                n.beta = true;
                first = false;
                continue;
            }
            first = false;
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size() || v < 1) throw input_error("bad chain index: " + tok);
                n.indices.push_back(v);
            } catch (const std::exception&) {
                throw input_error("bad chain index: " + tok);
            }
        }
    } else {
        std::size_t i = 0;
        if (s[0] == 'b' || s[0] == 'B') {
            n.beta = true;
            i = 1;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '1' || s[i] > '9') throw input_error("bad chain character: " + std::string(1, s[i]));
            n.indices.push_back(s[i] - '0');
        }
    }
    if (!std::is_sorted(n.indices.begin(), n.indices.end()) ||
        std::adjacent_find(n.indices.begin(), n.indices.end()) != n.indices.end())
        throw input_error("chain indices must be strictly increasing");
    return n;
}

namespace {

Vec block_sum(const SurfaceModel& m, int lo, int hi) {
    Vec v(m.rank());
    for (int j = lo; j <= hi; ++j) v = vec_add(v, m.curve("c" + std::to_string(j)));
    return v;
}

void validate_chain_curves(const SurfaceModel& m, const std::vector<Vec>& curves) {
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            Int p = pairing(m.form, curves[i], curves[j]);
            Int want = (j == i + 1) ? 1 : 0;
            if (p != want) throw input_error("notation does not denote a chain");
        }
}

}  // namespace

ChainMapValue expand_subchain(const ChainNotation& n, const SurfaceModel& m) {
    const auto& idx = n.indices;
    std::vector<Vec> curves;
    if (n.beta && n.gamma3) throw input_error("notation cannot carry both prefixes");
    if (n.gamma3) {
        if (!m.has_curve("gamma3")) throw input_error("gamma3 requires genus >= 3");
        if (idx.empty() || idx.front() < 6) throw input_error("gamma3 chain indices must start at 6");
        curves.push_back(m.curve("c2"));
        curves.push_back(m.curve("gamma3"));
    } else if (n.beta) {
        if (!m.has_curve("beta")) throw input_error("beta requires genus >= 2");
        // canonical beta chains start at 5; conjugation by T_{c_5} produces
        // first indices beyond 5, denoting the curve beta + c_5 + ... + c_{i_1-1}
        if (idx.empty() || idx.front() < 5) throw input_error("beta chain indices must start at 5 or later");
        Vec head = m.curve("beta");
        if (idx.front() > 5) head = vec_add(head, block_sum(m, 5, idx.front() - 1));
        curves.push_back(std::move(head));
    } else if (idx.size() < 2) {
        throw input_error("a straight chain needs at least two indices");
    }
    if (!idx.empty() && (idx.front() < 1 || idx.back() > m.sentinel_max()))
        throw input_error("chain index out of range for this surface");
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) curves.push_back(block_sum(m, idx[k], idx[k + 1] - 1));
    if (curves.empty()) throw input_error("notation denotes no curves");
    if (curves.size() % 2 == 0) throw input_error("notation denotes an even number of curves");
    validate_chain_curves(m, curves);
    ChainMapValue v;
    v.genus = static_cast<int>((curves.size() - 1) / 2);
    v.boundary_class = boundary_class(m, curves);
    v.curves = std::move(curves);
    return v;
}

Vec chain_sum(const SurfaceModel& m, const Vec& a, const Vec& b) {
    Int p = pairing(m.form, a, b);
    if (p != 1 && p != -1) throw input_error("chain_sum requires neighboring curves");
    return vec_add(a, b);
}

Vec boundary_class(const SurfaceModel& m, const std::vector<Vec>& curves) {
    if (curves.empty() || curves.size() % 2 == 0) throw input_error("boundary_class needs an odd chain");
    Vec s(m.rank());
    for (std::size_t i = 0; i < curves.size(); i += 2) s = vec_add(s, curves[i]);
    for (const Vec& c : curves)
        if (pairing(m.form, s, c) != 0) throw std::runtime_error("boundary class fails orthogonality");
    return s;
}

namespace {

bool contains(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

// -1: no rule (beta interactions), 0: commute, 1: A-rules, 2: B-rules
int rule_case(int j, const ChainNotation& n) {
    if (n.beta) {
        if (j <= 2) return 0;
        if (j == 3 || j == 4) return -1;
    }
    if (n.gamma3) return -1;  // conjugation along gamma chains is outside the rule set
    bool in_j = contains(n.indices, j);
    bool in_j1 = contains(n.indices, j + 1);
    if (in_j == in_j1) return 0;
    return in_j ? 1 : 2;
}

}  // namespace

bool commutes_with_twist(int j, const ChainNotation& n) {
    if (j < 1) throw input_error("twist index must be positive");
    return rule_case(j, n) == 0;
}

GroupWord conjugate_by_twist(int j, int sign, const ChainNotation& n, const SurfaceModel& m) {
    if (sign != 1 && sign != -1) throw input_error("twist sign must be +-1");
    if (j < 1 || j > static_cast<int>(m.chain_curves)) throw input_error("twist index out of range");
    expand_subchain(n, m);  // validates the notation itself
    int rc = rule_case(j, n);
    if (rc == -1) throw input_error("no rewrite rule for this twist/chain combination");
    if (rc == 0) return {WordToken::of_chain(n)};

    ChainNotation shifted = n;
    if (rc == 1) {
        // j = i_m, j+1 not an index: i_m -> i_m + 1
        auto it = std::find(shifted.indices.begin(), shifted.indices.end(), j);
        *it += 1;
    } else {
        // j+1 = i_m, j not an index: i_m -> i_m - 1
        auto it = std::find(shifted.indices.begin(), shifted.indices.end(), j + 1);
        *it -= 1;
    }
    expand_subchain(shifted, m);  // the rewritten notation must stay valid

    // A1 / B1 are the single-token cases; the opposite signs produce the
    // three-token word n n'^{-1} n.
    bool single = (rc == 1 && sign == -1) || (rc == 2 && sign == 1);
    if (single) return {WordToken::of_chain(shifted)};
    return {WordToken::of_chain(n), WordToken::of_chain(shifted, -1), WordToken::of_chain(n)};
}

namespace {

ChainNotation dense_run(int lo, int hi) {
    ChainNotation n;
    for (int i = lo; i <= hi; ++i) n.indices.push_back(i);
    return n;
}

WordToken conj_b(ChainNotation n, int e = 1) {
    WordToken t = WordToken::of_chain(std::move(n), e);
    t.conjugators.emplace_back("b", 1);
    return t;
}

std::pair<GroupWord, GroupWord> lantern_words(const SurfaceModel& m) {
    if (m.boundary_count != 2) throw input_error("the lantern decomposition needs two boundary components");
    if (m.genus < 2) throw input_error("lantern requires genus >= 2");
    const std::size_t h = m.handles;
    const int g = m.genus;
    auto x = [&](int i) { return m.basis_vector(i - 1); };
    auto y = [&](int i) { return m.basis_vector(h + i - 1); };

    // Four-holed sphere bounded by d1, d2 and two separating curves s1
    // (around handle 1) and s2 (around handles 2..g). Interior curves:
    //   u  around {d1, d2}   (class 0, separates off all g handles),
    //   w  around {d1, s2}   (class [d1]),
    //   w' around {d2, s2}   (class [d2]).
    // The lantern relation rearranges to
    //   T_{s1} = (T_u T_{s2}^{-1}) (T_{w'} T_{d2}^{-1}) (T_w T_{d1}^{-1}),
    // three bounding-pair maps against the separating twist T_{s1}.
    BpCertificate s1;
    s1.pairs = {{x(1), y(1)}};
    s1.common_class = Vec(m.rank());
    s1.label = "T_s1";

    BpCertificate u_s2;
    u_s2.pairs = {{x(1), y(1)}};
    u_s2.common_class = Vec(m.rank());
    u_s2.label = "T_u T_s2^-1";

    BpCertificate wp_d2;
    for (int i = 2; i <= g; ++i) wp_d2.pairs.emplace_back(x(i), y(i));
    wp_d2.common_class = m.curve("d2");
    wp_d2.label = "T_w' T_d2^-1";

    BpCertificate w_d1 = wp_d2;
    w_d1.common_class = m.curve("d1");
    w_d1.label = "T_w T_d1^-1";

    WordToken lhs;
    lhs.kind = WordToken::Kind::SeparatingTwist;
    lhs.certificate = s1;

    auto bp = [](BpCertificate c) {
        WordToken t;
        t.kind = WordToken::Kind::BoundingPair;
        t.certificate = std::move(c);
        return t;
    };
    return {{lhs}, {bp(u_s2), bp(wp_d2), bp(w_d1)}};
}

}  // namespace

std::pair<GroupWord, GroupWord> relation_words(const std::string& name, int k, const SurfaceModel& m) {
    const int g = m.genus;
    if (name == "lantern") return lantern_words(m);
    if (name != "J1" && name != "J2" && name != "J3") throw input_error("unknown relation: " + name);
    const int kmax = (name == "J3" && m.boundary_count == 2) ? g + 1 : g;
    if (k < 3 || k > kmax)
        throw input_error("relation " + name + " needs 3 <= k <= " + std::to_string(kmax));

    if (name == "J1") {
        // [234...2k+1] = [23'67...2k+1] [67...2k+1]^{-1} [456...2k+1] [2345].
        // The factor [67...2k+1]^{-1} is the trivial one-curve map at k = 3
        // and is forced for k >= 4: without it no class for the gamma curve
        // makes the right side match, since the left side minus the straight
        // factors lies in the span of triples containing [c_2].
        GroupWord lhs{WordToken::of_chain(dense_run(2, 2 * k + 1))};
        ChainNotation gamma = dense_run(6, 2 * k + 1);
        gamma.gamma3 = true;
        GroupWord rhs{WordToken::of_chain(gamma), WordToken::of_chain(dense_run(6, 2 * k + 1), -1),
                      WordToken::of_chain(dense_run(4, 2 * k + 1)), WordToken::of_chain(dense_run(2, 5))};
        return {lhs, rhs};
    }
    if (name == "J2") {
        // [234...2k+1]^{-1} (T_b)*[234...2k+1]
        //   = [2345]^{-1} [456...2k+1]^{-1} [beta56...2k+1] (T_b)*[2345]
        ChainNotation full = dense_run(2, 2 * k + 1);
        ChainNotation beta = dense_run(5, 2 * k + 1);
        beta.beta = true;
        GroupWord lhs{WordToken::of_chain(full, -1), conj_b(full)};
        GroupWord rhs{WordToken::of_chain(dense_run(2, 5), -1),
                      WordToken::of_chain(dense_run(4, 2 * k + 1), -1), WordToken::of_chain(beta),
                      conj_b(dense_run(2, 5))};
        return {lhs, rhs};
    }
    // J3: [1234] [1256...2k] (T_b)*[345...2k] = [56...2k] [1234...2k]
    ChainNotation mid;
    mid.indices = {1, 2};
    for (int i = 5; i <= 2 * k; ++i) mid.indices.push_back(i);
    GroupWord lhs{WordToken::of_chain(dense_run(1, 4)), WordToken::of_chain(mid),
                  conj_b(dense_run(3, 2 * k))};
    GroupWord rhs{WordToken::of_chain(dense_run(5, 2 * k)), WordToken::of_chain(dense_run(1, 2 * k))};
    return {lhs, rhs};
}

std::vector<ChainNotation> enumerate_generators(const SurfaceModel& m) {
    if (m.genus < 3) throw input_error("generator enumeration needs genus >= 3");
    const int top = m.generator_sentinel_max();  // 2g+2
    std::vector<ChainNotation> out;

    // straight chains: even-size index subsets of {1..2g+2}, by size then lex
    for (int size = 2; size <= top; size += 2) {
        std::vector<int> pick(size);
        auto rec = [&](auto&& self, int pos, int lo) -> void {
            if (pos == size) {
                ChainNotation n;
                n.indices = pick;
                out.push_back(std::move(n));
                return;
            }
            for (int v = lo; v + (size - pos - 1) <= top; ++v) {
                pick[pos] = v;
                self(self, pos + 1, v + 1);
            }
        };
        rec(rec, 0, 1);
    }
    // beta chains: first index 5, then odd total index count
    if (m.has_curve("beta")) {
        for (int size = 1; size - 1 <= top - 5; size += 2) {
            std::vector<int> pick(size);
            pick[0] = 5;
            auto rec = [&](auto&& self, int pos, int lo) -> void {
                if (pos == size) {
                    ChainNotation n;
                    n.beta = true;
                    n.indices = pick;
                    out.push_back(std::move(n));
                    return;
                }
                for (int v = lo; v + (size - pos - 1) <= top; ++v) {
                    pick[pos] = v;
                    self(self, pos + 1, v + 1);
                }
            };
            rec(rec, 1, 6);
        }
    }
    for (const auto& n : out) expand_subchain(n, m);  // every generator must be a valid odd chain
    return out;
}

}  // namespace torelli
