// G2 structure constants from a Chevalley basis.
//
// Roots are realized as integer vectors in the A2 plane of Z^3
// (alpha1 = (1,-1,0) short, alpha2 = (-1,2,-1) long), generated by closing
// the simple roots under Weyl reflections. Structure constants N(a,b) are
// +-(p+1) with p the root-string length; signs are fixed by choosing + for
// extraspecial pairs and propagating through the standard trilinear and
// quadrilinear relations among the N(a,b).

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "casimir/algebra.hpp"

namespace casimir::detail {

namespace {

using Vec3 = std::array<int, 3>;

int dot(const Vec3& u, const Vec3& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 add(const Vec3& u, const Vec3& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

Vec3 sub(const Vec3& u, const Vec3& v) {
    return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

Vec3 neg(const Vec3& u) { return {-u[0], -u[1], -u[2]}; }

struct RootSystem {
    std::vector<Vec3> simple;
    std::vector<Vec3> roots;                 // positives first, then negatives
    std::map<Vec3, int> index;
    std::vector<std::array<int, 2>> coords;  // simple-root coordinates
    int n_positive = 0;

    bool is_root(const Vec3& v) const { return index.count(v) > 0; }
    int height(int i) const { return coords[i][0] + coords[i][1]; }
    bool positive(int i) const { return i < n_positive; }
    int negative_of(int i) const { return index.at(neg(roots[i])); }

    //  2 (beta, alpha) / (alpha, alpha), always integral
    int pairing(const Vec3& beta, const Vec3& alpha) const {
        int num = 2 * dot(beta, alpha);
        int den = dot(alpha, alpha);
        return num / den;
    }
};

RootSystem build_g2_roots() {
    RootSystem rs;
    rs.simple = {{1, -1, 0}, {-1, 2, -1}};
    std::map<Vec3, std::array<int, 2>> found;
    found[rs.simple[0]] = {1, 0};
    found[rs.simple[1]] = {0, 1};
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = found;
        for (const auto& [r, c] : snapshot)
            for (int i = 0; i < 2; ++i) {
                int k = rs.pairing(r, rs.simple[i]);
                Vec3 refl = r;
                std::array<int, 2> rc = c;
                for (int t = 0; t < 3; ++t) refl[t] -= k * rs.simple[i][t];
                rc[i] -= k;
                if (!found.count(refl)) {
                    found[refl] = rc;
                    grew = true;
                }
                Vec3 negr = neg(r);
                if (!found.count(negr)) {
                    found[negr] = {-c[0], -c[1]};
                    grew = true;
                }
            }
    }
    // Positive roots ordered by height, then by coordinates.
    std::vector<std::pair<std::array<int, 2>, Vec3>> pos, negs;
    for (const auto& [r, c] : found)
        (c[0] + c[1] > 0 ? pos : negs).push_back({c, r});
    auto by_height = [](const auto& a, const auto& b) {
        int ha = a.first[0] + a.first[1], hb = b.first[0] + b.first[1];
        return std::tie(ha, a.first) < std::tie(hb, b.first);
    };
    std::sort(pos.begin(), pos.end(), by_height);
    for (const auto& [c, r] : pos) {
        rs.index[r] = static_cast<int>(rs.roots.size());
        rs.roots.push_back(r);
        rs.coords.push_back(c);
    }
    rs.n_positive = static_cast<int>(rs.roots.size());
    for (const auto& [c, r] : pos) {
        Vec3 m = neg(r);
        rs.index[m] = static_cast<int>(rs.roots.size());
        rs.roots.push_back(m);
        rs.coords.push_back({-c[0], -c[1]});
    }
    return rs;
}

class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootSystem& rs) : rs_(rs) {
        int nr = static_cast<int>(rs.roots.size());
        table_.assign(nr, std::vector<std::optional<Rat>>(nr));
        fill_positive_pairs();
    }

    // N(a,b) with [e_a, e_b] = N(a,b) e_{a+b}; zero when a+b is not a root.
    Rat operator()(int a, int b) const { return resolve(a, b); }

    // Largest p with beta - p*alpha still a root.
    int string_length(int a, int b) const {
        int p = 0;
        Vec3 v = sub(rs_.roots[b], rs_.roots[a]);
        while (rs_.is_root(v)) {
            ++p;
            v = sub(v, rs_.roots[a]);
        }
        return p;
    }

private:
    Rat resolve(int a, int b) const {
        if (table_[a][b]) return *table_[a][b];
        Rat v = compute(a, b);
        table_[a][b] = v;
        return v;
    }

    Rat compute(int a, int b) const {
        Vec3 sum = add(rs_.roots[a], rs_.roots[b]);
        if (!rs_.is_root(sum)) return Rat(0);
        bool pa = rs_.positive(a), pb = rs_.positive(b);
        if (pa && pb)
            throw Error(ErrorCode::InternalConsistency,
                        "positive pair missing from Chevalley table");
        if (!pa && !pb) return -resolve(rs_.negative_of(a), rs_.negative_of(b));
        if (!pa && pb) return -resolve(b, a);
        // a positive, b negative; c completes the zero-sum triple:
        //   N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)
        int c = rs_.index.at(neg(sum));
        int cc = dot(rs_.roots[c], rs_.roots[c]);
        if (rs_.index.at(sum) < rs_.n_positive) {
            int aa = dot(rs_.roots[a], rs_.roots[a]);
            return rat(cc, aa) * resolve(b, c);
        }
        int bb = dot(rs_.roots[b], rs_.roots[b]);
        return rat(cc, bb) * resolve(c, a);
    }

    void fill_positive_pairs() {
        int np = rs_.n_positive;
        struct Sum {
            int gamma;
            std::vector<std::pair<int, int>> pairs;  // (alpha, beta), alpha < beta
        };
        std::vector<Sum> sums;
        for (int g = 0; g < np; ++g) {
            Sum s;
            s.gamma = g;
            for (int a = 0; a < np; ++a)
                for (int b = a + 1; b < np; ++b)
                    if (add(rs_.roots[a], rs_.roots[b]) == rs_.roots[g])
                        s.pairs.push_back({a, b});
            if (!s.pairs.empty()) sums.push_back(s);
        }
        // Positive roots are already height-ordered, so so are the sums.
        for (const auto& s : sums) {
            auto [a0, b0] = s.pairs.front();  // extraspecial: minimal alpha
            set_pair(a0, b0, Rat(string_length(a0, b0) + 1));
            int gg = dot(rs_.roots[s.gamma], rs_.roots[s.gamma]);
            for (size_t i = 1; i < s.pairs.size(); ++i) {
                auto [a, b] = s.pairs[i];
                // Quadruple (a, b, -a0, -b0) sums to zero; solve the
                // quadrilinear relation for N(a,b).
                int na0 = rs_.negative_of(a0), nb0 = rs_.negative_of(b0);
                Rat term(0);
                Vec3 d1 = sub(rs_.roots[b], rs_.roots[a0]);
                if (rs_.is_root(d1))
                    term += resolve(b, na0) * resolve(a, nb0) / Rat(dot(d1, d1));
                Vec3 d2 = sub(rs_.roots[a], rs_.roots[a0]);
                if (rs_.is_root(d2))
                    term += resolve(na0, a) * resolve(b, nb0) / Rat(dot(d2, d2));
                Rat val = Rat(gg) / resolve(a0, b0) * term;
                Rat expect(string_length(a, b) + 1);
                if (val != expect && val != -expect)
                    throw Error(ErrorCode::InternalConsistency,
                                "Chevalley sign propagation failed");
                set_pair(a, b, val);
            }
        }
    }

    void set_pair(int a, int b, const Rat& v) {
        table_[a][b] = v;
        table_[b][a] = -v;
    }

    const RootSystem& rs_;
    mutable std::vector<std::vector<std::optional<Rat>>> table_;
};

}  // namespace

StructureConstants chevalley_g2() {
    RootSystem rs = build_g2_roots();
    int np = rs.n_positive;
    int nr = static_cast<int>(rs.roots.size());
    if (np != 6 || nr != 12)
        throw Error(ErrorCode::InternalConsistency, "G2 root count");
    ChevalleyConstants N(rs);

    int rank = 2;
    int dim = rank + nr;  // h1, h2, then e_alpha in root order
    StructureConstants f;
    f.dim = dim;
    f.brackets.assign(dim, std::vector<std::vector<std::pair<int, Rat>>>(dim));
    auto set = [&](int a, int b, int c, const Rat& v) {
        if (v != 0) f.brackets[a][b].push_back({c, v});
    };

    // Coroot coordinates: alpha^vee = c1 alpha1^vee + c2 alpha2^vee.
    auto coroot_coords = [&](int r) {
        std::array<Rat, 3> av;
        int norm = dot(rs.roots[r], rs.roots[r]);
        for (int t = 0; t < 3; ++t) av[t] = rat(2 * rs.roots[r][t], norm);
        std::array<std::array<Rat, 3>, 2> sv;
        for (int i = 0; i < 2; ++i) {
            int ni = dot(rs.simple[i], rs.simple[i]);
            for (int t = 0; t < 3; ++t) sv[i][t] = rat(2 * rs.simple[i][t], ni);
        }
        // Two coordinates suffice; the third is a consistency check.
        Rat det = sv[0][0] * sv[1][1] - sv[0][1] * sv[1][0];
        Rat c1 = (av[0] * sv[1][1] - av[1] * sv[1][0]) / det;
        Rat c2 = (sv[0][0] * av[1] - sv[0][1] * av[0]) / det;
        if (c1 * sv[0][2] + c2 * sv[1][2] != av[2])
            throw Error(ErrorCode::InternalConsistency, "coroot solve");
        return std::array<Rat, 2>{c1, c2};
    };

    for (int i = 0; i < rank; ++i)
        for (int r = 0; r < nr; ++r) {
            int k = rs.pairing(rs.roots[r], rs.simple[i]);
            set(i, rank + r, rank + r, Rat(k));
            set(rank + r, i, rank + r, Rat(-k));
        }
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            if (b == rs.negative_of(a)) {
                bool a_pos = rs.positive(a);
                int pos_root = a_pos ? a : b;
                auto c = coroot_coords(pos_root);
                Rat sign(a_pos ? 1 : -1);
                for (int i = 0; i < rank; ++i)
                    set(rank + a, rank + b, i, sign * c[i]);
                continue;
            }
            Vec3 s = add(rs.roots[a], rs.roots[b]);
            if (!rs.is_root(s)) continue;
            set(rank + a, rank + b, rank + rs.index.at(s), N(a, b));
        }
    return f;
}

}  // namespace casimir::detail
