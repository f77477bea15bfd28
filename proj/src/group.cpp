#include "cusped/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace cusped {

GroupSpec GroupSpec::free_group(int rank) {
    if (rank < 1) throw input_error("free group needs rank >= 1");
    GroupSpec s;
    s.kind = GroupKind::Free;
    s.rank = rank;
    return s;
}

GroupSpec GroupSpec::free_abelian(int rank) {
    if (rank < 1) throw input_error("free-abelian group needs rank >= 1");
    GroupSpec s;
    s.kind = GroupKind::FreeAbelian;
    s.rank = rank;
    return s;
}

GroupSpec GroupSpec::surface(int genus) {
    if (genus < 2) throw input_error("surface kind needs genus >= 2");
    GroupSpec s;
    s.kind = GroupKind::Surface;
    s.rank = genus;
    return s;
}

GroupSpec GroupSpec::free_product(std::vector<FreeProductFactor> factors) {
    if (factors.size() < 2) throw input_error("free product needs >= 2 factors");
    GroupSpec s;
    s.kind = GroupKind::FreeProduct;
    s.factors = std::move(factors);
    s.rank = 0;
    for (const auto& f : s.factors) {
        if (f.rank < 1) throw input_error("free product factor needs rank >= 1");
        s.rank += f.rank;
    }
    return s;
}

int GroupSpec::num_generators() const {
    return kind == GroupKind::Surface ? 2 * rank : rank;
}

std::string GroupSpec::generator_name(int idx) const {
    if (idx < 0 || idx >= num_generators() || idx >= 26)
        throw input_error("generator index out of range");
    return std::string(1, static_cast<char>('a' + idx));
}

std::vector<Word> GroupSpec::relators() const {
    if (kind != GroupKind::Surface) return {};
    // product of commutators [a_1,b_1]...[a_g,b_g]
    Word r;
    for (int i = 0; i < rank; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        r.letters.insert(r.letters.end(), {a, b, -a, -b});
    }
    return {r};
}

int GroupSpec::factor_of(int gen_idx) const {
    if (kind != GroupKind::FreeProduct) return 0;
    int off = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (gen_idx < off + factors[f].rank) return static_cast<int>(f);
        off += factors[f].rank;
    }
    throw input_error("generator index out of range");
}

// ------------------------------------------------------------------ normal forms

static void check_letters(const GroupSpec& spec, const Word& w) {
    int n = spec.num_generators();
    for (int l : w.letters)
        if (l == 0 || l > n || l < -n)
            throw input_error("word uses undeclared generator");
}

static Word abelian_collect(const Word& w, int first_gen, int n_gens) {
    std::vector<long long> e(n_gens, 0);
    for (int l : w.letters) {
        int idx = (l > 0 ? l : -l) - first_gen;
        e[idx] += (l > 0 ? 1 : -1);
    }
    Word out;
    for (int i = 0; i < n_gens; ++i) {
        long long k = e[i];
        for (long long j = 0; j < (k > 0 ? k : -k); ++j)
            out.letters.push_back(k > 0 ? first_gen + i : -(first_gen + i));
    }
    return out;
}

namespace {

// Symmetrized relator set for surface groups: all cyclic shifts of the
// relator and its inverse.
struct SurfaceRewriter {
    int genus;
    int rlen;                       // 4 * genus
    std::vector<std::vector<int>> sym;

    explicit SurfaceRewriter(const GroupSpec& spec) : genus(spec.rank) {
        Word r = spec.relators()[0];
        rlen = static_cast<int>(r.size());
        auto add_shifts = [&](const Word& w) {
            for (int s = 0; s < rlen; ++s) {
                std::vector<int> v;
                v.reserve(rlen);
                for (int i = 0; i < rlen; ++i) v.push_back(w.letters[(s + i) % rlen]);
                sym.push_back(std::move(v));
            }
        };
        add_shifts(r);
        add_shifts(r.inverse());
    }

    // Longest prefix of some symmetrized relator occurring at position i of w.
    // Returns (length, relator index) with length >= min_len, or length 0.
    std::pair<int, int> match_at(const std::vector<int>& w, int i, int min_len) const {
        int best = 0, best_r = -1;
        for (std::size_t r = 0; r < sym.size(); ++r) {
            int l = 0;
            while (i + l < static_cast<int>(w.size()) && l < rlen && w[i + l] == sym[r][l]) ++l;
            if (l > best) {
                best = l;
                best_r = static_cast<int>(r);
            }
        }
        if (best < min_len) return {0, -1};
        return {best, best_r};
    }

    // Replace w[i..i+len) (a prefix of sym[r]) by the inverse of the rest of
    // sym[r]; result is freely reduced.
    Word rewrite(const std::vector<int>& w, int i, int len, int r) const {
        Word out;
        out.letters.assign(w.begin(), w.begin() + i);
        for (int k = rlen - 1; k >= len; --k) out.letters.push_back(-sym[r][k]);
        out.letters.insert(out.letters.end(), w.begin() + i + len, w.end());
        return free_reduce(out);
    }

    // Dehn's algorithm: shrink while any subword exceeds half a relator.
    Word dehn_reduce(Word w) const {
        w = free_reduce(w);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < static_cast<int>(w.size()) && !changed; ++i) {
                auto [len, r] = match_at(w.letters, i, rlen / 2 + 1);
                if (len > 0) {
                    w = rewrite(w.letters, i, len, r);
                    changed = true;
                }
            }
        }
        return w;
    }

    // All distinct words obtained by one exact-half-relator swap.
    std::vector<Word> half_swaps(const Word& w) const {
        std::vector<Word> out;
        int half = rlen / 2;
        for (int i = 0; i + half <= static_cast<int>(w.size()); ++i) {
            for (std::size_t r = 0; r < sym.size(); ++r) {
                bool ok = true;
                for (int l = 0; l < half && ok; ++l) ok = w.letters[i + l] == sym[r][l];
                if (!ok) continue;
                Word cand = rewrite(w.letters, i, half, static_cast<int>(r));
                out.push_back(std::move(cand));
            }
        }
        return out;
    }
};

// Canonical form in a surface group: Dehn-reduce, then take the shortlex
// least word reachable through length-preserving half-relator swaps.
// Geodesic bigons in these C'(1/6) presentations are ladders of half-half
// cells, so the swap closure reaches every geodesic representative.
Word surface_canonical(const GroupSpec& spec, const Word& w0) {
    SurfaceRewriter rw(spec);
    Word start = rw.dehn_reduce(w0);
    if (start.empty()) return start;

    std::set<std::vector<int>> seen;
    std::deque<Word> queue;
    Word best = start;
    seen.insert(start.letters);
    queue.push_back(start);
    const std::size_t kCap = 200000;
    while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        for (Word& nxt : rw.half_swaps(cur)) {
            if (nxt.size() < cur.size()) {
                // a swap exposed a Dehn reduction; restart from the shorter word
                return surface_canonical(spec, nxt);
            }
            Word red = rw.dehn_reduce(nxt);
            if (red.size() < cur.size()) return surface_canonical(spec, red);
            if (seen.insert(red.letters).second) {
                if (shortlex_less(red, best)) best = red;
                queue.push_back(red);
                if (seen.size() > kCap)
                    throw resource_error("surface normal form closure too large");
            }
        }
    }
    return best;
}

Word free_product_normal(const GroupSpec& spec, const Word& w) {
    // split into syllables by factor, normalize each, merge, repeat
    struct Syl {
        int factor;
        Word word;
    };
    std::vector<int> letters = w.letters;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Syl> syls;
        for (int l : letters) {
            int f = spec.factor_of((l > 0 ? l : -l) - 1);
            if (syls.empty() || syls.back().factor != f) syls.push_back({f, Word{}});
            syls.back().word.letters.push_back(l);
        }
        std::vector<int> out;
        for (auto& s : syls) {
            const auto& fac = spec.factors[s.factor];
            int first = 1;
            for (int i = 0; i < s.factor; ++i) first += spec.factors[i].rank;
            Word nf = fac.abelian ? abelian_collect(s.word, first, fac.rank)
                                  : free_reduce(s.word);
            if (nf.empty()) {
                changed = true;  // empty syllable: neighbours may now merge
                continue;
            }
            out.insert(out.end(), nf.letters.begin(), nf.letters.end());
        }
        if (out != letters) changed = true;
        letters = std::move(out);
    }
    return Word{letters};
}

}  // namespace

Word normal_form(const GroupSpec& spec, const Word& w) {
    check_letters(spec, w);
    switch (spec.kind) {
        case GroupKind::Free:
            return free_reduce(w);
        case GroupKind::FreeAbelian:
            return abelian_collect(w, 1, spec.rank);
        case GroupKind::Surface:
            return surface_canonical(spec, w);
        case GroupKind::FreeProduct:
            return free_product_normal(spec, w);
    }
    throw unsupported_error("no normal form available");
}

// ------------------------------------------------------------------ Cayley balls

MetricGraph cayley_ball(const GroupSpec& spec, int radius, std::size_t max_vertices) {
    if (radius < 0) throw input_error("radius must be >= 0");
    MetricGraph g;
    std::map<std::string, int> dist;  // by label, for dedup during BFS

    Word e;
    g.add_vertex(e.str(), 0);
    dist[e.str()] = 0;
    std::deque<Word> frontier{e};

    int n = spec.num_generators();
    std::vector<int> letter_order;
    for (int i = 1; i <= n; ++i) {
        letter_order.push_back(i);
        letter_order.push_back(-i);
    }

    std::vector<std::pair<int, int>> edges;
    while (!frontier.empty()) {
        Word v = frontier.front();
        frontier.pop_front();
        int dv = dist[v.str()];
        if (dv >= radius) continue;
        for (int l : letter_order) {
            Word wn = v;
            wn.letters.push_back(l);
            Word nf = normal_form(spec, wn);
            auto it = dist.find(nf.str());
            if (it == dist.end()) {
                if (static_cast<std::size_t>(g.num_vertices()) >= max_vertices)
                    throw resource_error("cayley_ball: vertex cap exceeded");
                g.add_vertex(nf.str(), 0);
                dist[nf.str()] = dv + 1;
                frontier.push_back(nf);
            }
        }
    }
    // edges: right multiplication by a generator, both endpoints in the ball
    for (int v = 0; v < g.num_vertices(); ++v) {
        Word wv = Word::parse(g.label(v));
        for (int i = 1; i <= n; ++i) {
            Word wn = wv;
            wn.letters.push_back(i);
            auto u = g.find_vertex(normal_form(spec, wn).str());
            if (u && *u != v) g.add_edge(v, *u);
        }
    }
    return g;
}

// ------------------------------------------------------------------ peripherals

namespace {

// Exact cyclic decomposition in a free group: nf(u) = p s p^-1 with s
// cyclically reduced.
struct CyclicDecomp {
    Word prefix, core;
};

CyclicDecomp cyclic_decompose_free(const Word& u) {
    Word w = u;
    Word prefix;
    while (w.size() >= 2 && w.letters.front() == -w.letters.back()) {
        prefix.letters.push_back(w.letters.front());
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
    }
    return {prefix, w};
}

bool is_power_of(const Word& core, const Word& mid) {
    if (core.empty()) return mid.empty();
    if (mid.size() % core.size() != 0) return false;
    Word c = core;
    bool fwd = true, bwd = true;
    Word ci = core.inverse();
    for (std::size_t i = 0; i < mid.size(); ++i) {
        if (mid.letters[i] != c.letters[i % c.size()]) fwd = false;
        if (mid.letters[i] != ci.letters[i % ci.size()]) bwd = false;
    }
    return fwd || bwd;
}

std::vector<long long> exponent_vector(const Word& w, int n) {
    std::vector<long long> e(n, 0);
    for (int l : w.letters) e[(l > 0 ? l : -l) - 1] += (l > 0 ? 1 : -1);
    return e;
}

// Solve sum_i x_i * rows[i] = target over the integers (small dims).
bool lattice_member(const std::vector<std::vector<long long>>& rows, std::vector<long long> target) {
    // Gaussian elimination over Z via repeated gcd steps on a working copy.
    std::vector<std::vector<long long>> m = rows;
    std::size_t dim = target.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < m.size(); ++c) {
        // make m[r][c] the gcd of column c below r
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            while (m[i][c] != 0) {
                if (m[r][c] == 0) {
                    std::swap(m[r], m[i]);
                    continue;
                }
                long long q = m[i][c] / m[r][c];
                for (std::size_t k = 0; k < dim; ++k) m[i][k] -= q * m[r][k];
                if (m[i][c] != 0) std::swap(m[r], m[i]);
            }
        }
        if (m[r][c] == 0) continue;
        long long q = target[c] / m[r][c];
        for (std::size_t k = 0; k < dim; ++k) target[k] -= q * m[r][k];
        if (target[c] != 0) return false;
        ++r;
    }
    for (std::size_t c = 0; c < dim; ++c)
        if (target[c] != 0) return false;
    return true;
}

}  // namespace

PeripheralSpec validate_peripherals(const GroupSpec& spec,
                                    const std::vector<std::pair<std::string, std::vector<Word>>>& raw) {
    PeripheralSpec out;
    for (const auto& [name, gens] : raw) {
        PeripheralSubgroup sub;
        sub.name = name;
        for (const Word& g : gens) {
            Word nf = normal_form(spec, g);
            if (!nf.empty()) sub.generators.push_back(nf);
        }
        if (sub.generators.empty()) throw input_error("peripheral subgroup '" + name + "' is trivial");

        if (sub.generators.size() == 1) {
            sub.shape = SubgroupShape::Cyclic;
            sub.cyclic_gen = sub.generators[0];
        } else {
            bool all_letters = true;
            std::set<int> letters;
            for (const Word& g : sub.generators) {
                if (g.size() != 1) all_letters = false;
                else letters.insert(std::abs(g.letters[0]));
            }
            if (all_letters && letters.size() == sub.generators.size() &&
                spec.kind != GroupKind::Surface) {
                sub.shape = SubgroupShape::StandardFactor;
                sub.factor_letters.assign(letters.begin(), letters.end());
            } else if (spec.kind == GroupKind::FreeAbelian) {
                sub.shape = SubgroupShape::Lattice;
                for (const Word& g : sub.generators)
                    sub.lattice.push_back(exponent_vector(g, spec.rank));
            } else {
                throw unsupported_error("unsupported peripheral: '" + name + "'");
            }
        }

        // properness at ball scale: some vertex of the radius-2 ball is outside
        MetricGraph ball = cayley_ball(spec, 2);
        bool proper = false;
        for (int v = 0; v < ball.num_vertices() && !proper; ++v)
            if (!peripheral_member(spec, sub, Word::parse(ball.label(v)))) proper = true;
        if (!proper) throw input_error("peripheral subgroup '" + name + "' is not proper");

        out.subgroups.push_back(std::move(sub));
    }
    return out;
}

bool peripheral_member(const GroupSpec& spec, const PeripheralSubgroup& sub, const Word& w) {
    Word v = normal_form(spec, w);
    switch (sub.shape) {
        case SubgroupShape::Cyclic: {
            if (v.empty()) return true;
            const Word& u = sub.cyclic_gen;
            if (spec.kind == GroupKind::Free) {
                auto [p, s] = cyclic_decompose_free(u);
                if (s.empty()) return v.empty();
                // v must be p * s^k * p^-1
                std::size_t np = p.size();
                if (v.size() < 2 * np || (v.size() - 2 * np) % s.size() != 0) return false;
                for (std::size_t i = 0; i < np; ++i)
                    if (v.letters[i] != p.letters[i]) return false;
                Word pi = p.inverse();
                for (std::size_t i = 0; i < np; ++i)
                    if (v.letters[v.size() - np + i] != pi.letters[i]) return false;
                Word mid;
                mid.letters.assign(v.letters.begin() + np, v.letters.end() - np);
                return is_power_of(s, mid);
            }
            if (spec.kind == GroupKind::FreeAbelian) {
                auto eu = exponent_vector(u, spec.rank);
                auto ev = exponent_vector(v, spec.rank);
                long long k = 0;
                bool set = false;
                for (int i = 0; i < spec.rank; ++i) {
                    if (eu[i] == 0) {
                        if (ev[i] != 0) return false;
                        continue;
                    }
                    if (ev[i] % eu[i] != 0) return false;
                    long long ki = ev[i] / eu[i];
                    if (set && ki != k) return false;
                    k = ki;
                    set = true;
                }
                return true;
            }
            // Surface / FreeProduct: bounded power scan; canonical lengths of
            // powers of a nontrivial element eventually grow monotonically.
            std::size_t cap = v.size() + 2 * u.size() + 8;
            Word pos = Word{}, neg = Word{};
            for (int k = 0; k <= 1000; ++k) {
                if (normal_form(spec, pos) == v || normal_form(spec, neg) == v) return true;
                pos = normal_form(spec, pos * u);
                neg = normal_form(spec, neg * u.inverse());
                if (pos.size() > cap && neg.size() > cap) return false;
            }
            throw resource_error("cyclic membership scan exceeded");
        }
        case SubgroupShape::StandardFactor: {
            for (int l : v.letters) {
                int a = l > 0 ? l : -l;
                if (!std::binary_search(sub.factor_letters.begin(), sub.factor_letters.end(), a))
                    return false;
            }
            return true;
        }
        case SubgroupShape::Lattice:
            return lattice_member(sub.lattice, exponent_vector(v, spec.rank));
    }
    return false;
}

Word coset_representative(const GroupSpec& spec, const PeripheralSubgroup& sub, const Word& w) {
    Word v = normal_form(spec, w);
    switch (sub.shape) {
        case SubgroupShape::Cyclic: {
            const Word& u = sub.cyclic_gen;
            Word best = v;
            for (int dir = 0; dir < 2; ++dir) {
                Word step = dir == 0 ? u : u.inverse();
                Word cur = v;
                int stale = 0;
                for (int k = 0; k < 4000; ++k) {
                    cur = normal_form(spec, cur * step);
                    if (shortlex_less(cur, best)) {
                        best = cur;
                        stale = 0;
                    } else if (++stale > 2 && cur.size() > best.size() + 2 * u.size() + 4) {
                        break;  // lengths have escaped; minimum already seen
                    }
                }
            }
            return best;
        }
        case SubgroupShape::StandardFactor: {
            Word cur = v;
            while (!cur.letters.empty()) {
                int a = std::abs(cur.letters.back());
                if (!std::binary_search(sub.factor_letters.begin(), sub.factor_letters.end(), a)) break;
                cur.letters.pop_back();
                cur = normal_form(spec, cur);
            }
            return cur;
        }
        case SubgroupShape::Lattice: {
            auto ev = exponent_vector(v, spec.rank);
            // reduce by each lattice row in echelon order
            auto rows = sub.lattice;
            // bring rows to a row-echelon-ish form (gcd pivots)
            std::size_t r = 0;
            for (int c = 0; c < spec.rank && r < rows.size(); ++c) {
                for (std::size_t i = r + 1; i < rows.size(); ++i) {
                    while (rows[i][c] != 0) {
                        if (rows[r][c] == 0) {
                            std::swap(rows[r], rows[i]);
                            continue;
                        }
                        long long q = rows[i][c] / rows[r][c];
                        for (int k = 0; k < spec.rank; ++k) rows[i][k] -= q * rows[r][k];
                        if (rows[i][c] != 0) std::swap(rows[r], rows[i]);
                    }
                }
                if (rows[r][c] == 0) continue;
                if (rows[r][c] < 0)
                    for (int k = 0; k < spec.rank; ++k) rows[r][k] = -rows[r][k];
                long long piv = rows[r][c];
                long long q = ev[c] >= 0 ? ev[c] / piv : -((-ev[c] + piv - 1) / piv);
                for (int k = 0; k < spec.rank; ++k) ev[k] -= q * rows[r][k];
                ++r;
            }
            Word out;
            for (int i = 0; i < spec.rank; ++i)
                for (long long j = 0; j < std::abs(ev[i]); ++j)
                    out.letters.push_back(ev[i] > 0 ? i + 1 : -(i + 1));
            return out;
        }
    }
    return v;
}

std::vector<CosetTrace> peripheral_cosets(const GroupSpec& spec, const PeripheralSpec& per,
                                          const MetricGraph& ball) {
    std::vector<CosetTrace> out;
    for (std::size_t pi = 0; pi < per.subgroups.size(); ++pi) {
        const auto& sub = per.subgroups[pi];
        std::map<std::string, std::vector<int>> classes;
        std::map<std::string, Word> reps;
        for (int v = 0; v < ball.num_vertices(); ++v) {
            Word w = Word::parse(ball.label(v));
            Word key = coset_representative(spec, sub, w);
            classes[key.str()].push_back(v);
            reps.emplace(key.str(), key);
        }
        for (auto& [key, members] : classes) {
            CosetTrace t;
            t.peripheral_index = static_cast<int>(pi);
            t.representative = reps.at(key);
            std::sort(members.begin(), members.end());
            t.members = members;
            t.connected_in_ball = ball.induced(members).connected();
            out.push_back(std::move(t));
        }
    }
    return out;
}

// ------------------------------------------------------------------ induced structure

std::vector<long long> FiniteQuotientHom::image(const Word& w) const {
    std::vector<long long> v(moduli.size(), 0);
    for (int l : w.letters) {
        const auto& g = gen_images.at(static_cast<std::size_t>((l > 0 ? l : -l) - 1));
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] += (l > 0 ? g[i] : -g[i]);
            v[i] %= moduli[i];
            if (v[i] < 0) v[i] += moduli[i];
        }
    }
    return v;
}

bool FiniteQuotientHom::in_kernel(const Word& w) const {
    for (long long x : image(w))
        if (x != 0) return false;
    return true;
}

namespace {

std::vector<std::vector<long long>> subgroup_elements(const FiniteQuotientHom& hom,
                                                      const std::vector<std::vector<long long>>& gens) {
    std::set<std::vector<long long>> seen;
    std::deque<std::vector<long long>> q;
    std::vector<long long> zero(hom.moduli.size(), 0);
    seen.insert(zero);
    q.push_back(zero);
    while (!q.empty()) {
        auto cur = q.front();
        q.pop_front();
        for (const auto& g : gens) {
            auto nxt = cur;
            for (std::size_t i = 0; i < nxt.size(); ++i) {
                nxt[i] = (nxt[i] + g[i]) % hom.moduli[i];
                if (nxt[i] < 0) nxt[i] += hom.moduli[i];
            }
            if (seen.insert(nxt).second) q.push_back(nxt);
        }
    }
    return {seen.begin(), seen.end()};
}

long long order_in_quotient(const FiniteQuotientHom& hom, const std::vector<long long>& img) {
    long long s = 1;
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (img[i] == 0) continue;
        long long m = hom.moduli[i];
        long long o = m / std::gcd(m, img[i]);
        s = std::lcm(s, o);
    }
    return s;
}

}  // namespace

InducedPeripheralResult induced_peripheral(const GroupSpec& spec, const FiniteQuotientHom& hom,
                                           const PeripheralSpec& per, int ball_radius) {
    if (hom.gen_images.size() != static_cast<std::size_t>(spec.num_generators()))
        throw input_error("homomorphism must list an image per generator");
    InducedPeripheralResult res;
    MetricGraph ball = cayley_ball(spec, ball_radius);

    // ball elements in shortlex order for deterministic representatives
    std::vector<Word> elems;
    for (int v = 0; v < ball.num_vertices(); ++v) elems.push_back(Word::parse(ball.label(v)));
    std::sort(elems.begin(), elems.end(), shortlex_less);

    for (std::size_t pi = 0; pi < per.subgroups.size(); ++pi) {
        const auto& sub = per.subgroups[pi];
        std::vector<std::vector<long long>> gen_imgs;
        for (const Word& g : sub.generators) gen_imgs.push_back(hom.image(g));
        auto imP = subgroup_elements(hom, gen_imgs);
        std::set<std::vector<long long>> imP_set(imP.begin(), imP.end());

        // double cosets H\G/P <-> cosets of phi(P) in the finite quotient
        std::set<std::vector<long long>> covered;
        std::vector<Word> dreps;
        for (const Word& g : elems) {
            auto img = hom.image(g);
            // canonical coset tag: the sorted-least element of img + imP
            std::vector<long long> tag = img;
            for (const auto& p : imP) {
                std::vector<long long> cand(img.size());
                for (std::size_t i = 0; i < img.size(); ++i)
                    cand[i] = (img[i] + p[i]) % hom.moduli[i];
                if (cand < tag) tag = cand;
            }
            if (covered.insert(tag).second) dreps.push_back(g);
        }
        long long total_cosets = 1;
        for (long long m : hom.moduli) total_cosets *= m;
        long long expected = total_cosets / static_cast<long long>(imP.size());
        if (static_cast<long long>(dreps.size()) < expected) res.complete = false;

        for (const Word& d : dreps) {
            InducedPeripheralEntry entry;
            entry.peripheral_index = static_cast<int>(pi);
            entry.double_coset_rep = d;
            if (sub.shape == SubgroupShape::Cyclic) {
                Word conj = normal_form(spec, d * sub.cyclic_gen * d.inverse());
                long long s = order_in_quotient(hom, hom.image(conj));
                Word gen;
                for (long long i = 0; i < s; ++i) gen = gen * conj;
                entry.generators.push_back(normal_form(spec, gen));
            } else if (sub.shape == SubgroupShape::StandardFactor && spec.kind == GroupKind::Free) {
                // kernel of hom restricted to the free factor, via Schreier
                // generators on the coset graph of phi(P) in the quotient.
                std::map<std::vector<long long>, Word> rep;
                std::vector<long long> zero(hom.moduli.size(), 0);
                rep[zero] = Word{};
                std::deque<std::vector<long long>> q{zero};
                std::vector<int> ls;
                for (int a : sub.factor_letters) {
                    ls.push_back(a);
                    ls.push_back(-a);
                }
                while (!q.empty()) {
                    auto cur = q.front();
                    q.pop_front();
                    for (int l : ls) {
                        Word step = rep[cur];
                        step.letters.push_back(l);
                        auto img = hom.image(step);
                        if (!rep.count(img)) {
                            rep[img] = free_reduce(step);
                            q.push_back(img);
                        }
                    }
                }
                for (auto& [state, w] : rep) {
                    for (int l : ls) {
                        if (l < 0) continue;  // one Schreier generator per positive edge
                        Word step = w;
                        step.letters.push_back(l);
                        auto img = hom.image(step);
                        Word sg = free_reduce(step * rep.at(img).inverse());
                        if (!sg.empty()) {
                            Word conj = normal_form(spec, d * sg * d.inverse());
                            entry.generators.push_back(conj);
                        }
                    }
                }
            } else {
                throw unsupported_error("induced peripheral: unsupported subgroup shape");
            }
            res.entries.push_back(std::move(entry));
        }
    }
    return res;
}

}  // namespace cusped
