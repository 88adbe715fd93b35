#include "bsa/algpoint.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "bsa/polyops.hpp"

namespace bsa {

namespace {

struct QIv {
    Rational lo, hi;
};

QIv iv_add(const QIv& a, const QIv& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QIv iv_mul(const QIv& a, const QIv& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {lo, hi};
}

QIv iv_pow(const QIv& a, int e) {
    QIv r{Rational(1), Rational(1)};
    for (int i = 0; i < e; ++i) r = iv_mul(r, a);
    return r;
}

std::optional<int> interval_sign(const Poly& p, const SamplePoint& pt, size_t ncoords) {
    std::map<VarId, QIv> box;
    for (size_t i = 0; i < ncoords; ++i) {
        const AlgCoord& c = pt.coords[i];
        box[pt.order[i]] = c.exact ? QIv{c.value, c.value} : QIv{c.lo, c.hi};
    }
    QIv acc{Rational(0), Rational(0)};
    for (auto& [m, coeff] : p.terms()) {
        QIv t{coeff, coeff};
        for (auto& [v, e] : m) {
            auto it = box.find(v);
            if (it == box.end()) return std::nullopt;
            t = iv_mul(t, iv_pow(it->second, e));
        }
        acc = iv_add(acc, t);
    }
    if (acc.lo > 0) return 1;
    if (acc.hi < 0) return -1;
    if (acc.lo == 0 && acc.hi == 0) return 0;
    return std::nullopt;
}

// Pseudo-division of a by b in v with an even number of lc(b) multiplications,
// so that specialization scales the euclidean remainder by a positive value.
Poly prem_even(const Poly& a, const Poly& b, VarId v, int db) {
    Poly rem = a;
    auto bc = b.coeffs_in(v);
    Poly lcb = bc[db];
    int muls = 0;
    int dr;
    while (!rem.is_zero() && (dr = rem.degree_in(v)) >= db && dr >= 0) {
        if (rem.degree_in(v) == 0 && db == 0) break;
        auto rc = rem.coeffs_in(v);
        Poly lead = rc[dr];
        if (lead.is_zero()) break;  // cannot happen: coeffs_in gives true leading
        rem = rem * lcb - lead * b * Poly::var(v, dr - db);
        ++muls;
    }
    if (muls % 2) rem = rem * lcb;
    return rem;
}

}  // namespace

std::pair<Poly, int> prune_at(const Poly& p, VarId v, const SamplePoint& prefix) {
    auto cs = p.coeffs_in(v);
    int d = static_cast<int>(cs.size()) - 1;
    while (d >= 0 && sign_at(cs[d], prefix) == 0) --d;
    if (d < 0) return {Poly(), -1};
    std::vector<Poly> kept(cs.begin(), cs.begin() + d + 1);
    return {Poly::from_coeffs_in(v, kept), d};
}

namespace {

// Sign-faithful signed remainder sequence of the specializations of A and B in
// v over the prefix: each element, specialized, is a positive multiple of the
// true sequence element. A must not vanish identically.
std::vector<Poly> virtual_srem_seq(const Poly& A, const Poly& B, VarId v,
                                   const SamplePoint& prefix) {
    std::vector<Poly> seq;
    auto [a, da] = prune_at(A, v, prefix);
    if (da < 0) throw std::logic_error("virtual_srem_seq: first element vanishes");
    seq.push_back(a);
    auto [b, db] = prune_at(B, v, prefix);
    if (db < 0) return seq;
    seq.push_back(b);
    while (true) {
        const Poly& p0 = seq[seq.size() - 2];
        const Poly& p1 = seq[seq.size() - 1];
        int d0 = p0.degree_in(v), d1 = p1.degree_in(v);
        Poly r;
        if (d1 == 0) break;  // next remainder is zero
        if (d0 < d1) {
            r = p0;  // euclidean remainder is p0 itself
        } else {
            r = prem_even(p0, p1, v, d1);
        }
        auto [rp, dr] = prune_at(r, v, prefix);
        if (dr < 0) break;
        rp = -rp;
        Rational rc = rational_content(rp);
        if (rc != 0) rp = rp * (Rational(1) / rc);
        // divide by the polynomial content over the remaining variables; its
        // sign at the prefix fixes the orientation
        if (!rp.is_constant()) {
            Poly c = content_in(rp, v);
            if (!c.is_constant()) {
                int s = sign_at(c, prefix);
                rp = divide_exact(rp, c);
                if (s < 0) rp = -rp;
            }
        }
        seq.push_back(rp);
        if (rp.degree_in(v) == 0) break;
    }
    return seq;
}

int variations_at_value(const std::vector<Poly>& seq, VarId v, const Rational& t,
                        const SamplePoint& prefix) {
    int var = 0, last = 0;
    for (auto& p : seq) {
        int s = sign_at(p.eval_partial(v, t), prefix);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int variations_at_inf(const std::vector<Poly>& seq, VarId v, int dir, const SamplePoint& prefix) {
    int var = 0, last = 0;
    for (auto& p : seq) {
        int d = std::max(p.degree_in(v), 0);
        Poly lc = p.coeffs_in(v).back();
        int s = sign_at(lc, prefix);
        if (s == 0) throw std::logic_error("variations_at_inf: unpruned element");
        if (dir < 0 && d % 2) s = -s;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace

int sign_at(const Poly& p, const SamplePoint& pt) { return sign_at(p, pt, pt.coords.size()); }

int sign_at(const Poly& p, const SamplePoint& pt, size_t ncoords) {
    Poly q = p;
    for (size_t i = 0; i < ncoords; ++i) {
        if (pt.coords[i].exact && q.uses_var(pt.order[i]))
            q = q.eval_partial(pt.order[i], pt.coords[i].value);
    }
    if (q.is_constant()) return sgn(q.constant_value());
    if (auto s = interval_sign(q, pt, ncoords)) return *s;
    // highest algebraic coordinate used by q
    int idx = -1;
    for (size_t i = 0; i < ncoords; ++i)
        if (!pt.coords[i].exact && q.uses_var(pt.order[i])) idx = static_cast<int>(i);
    if (idx < 0) throw std::logic_error("sign_at: free variable outside the sample");
    VarId v = pt.order[idx];
    const AlgCoord& c = pt.coords[idx];
    auto [f, df] = prune_at(c.defpoly, v, pt);  // prefix below idx used only
    // Sturm query of q over the roots of f in (lo, hi): exactly one root there
    auto seq = virtual_srem_seq(f, f.derivative(v) * q, v, pt);
    int va = variations_at_value(seq, v, c.lo, pt);
    int vb = variations_at_value(seq, v, c.hi, pt);
    return va - vb;
}

int count_roots_at(const Poly& f, VarId v, const SamplePoint& prefix, const Rational& a,
                   const Rational& b) {
    auto [fp, d] = prune_at(f, v, prefix);
    if (d <= 0) return 0;
    auto seq = virtual_srem_seq(fp, fp.derivative(v), v, prefix);
    return variations_at_value(seq, v, a, prefix) - variations_at_value(seq, v, b, prefix);
}

int count_roots_at(const Poly& f, VarId v, const SamplePoint& prefix) {
    auto [fp, d] = prune_at(f, v, prefix);
    if (d <= 0) return 0;
    auto seq = virtual_srem_seq(fp, fp.derivative(v), v, prefix);
    return variations_at_inf(seq, v, -1, prefix) - variations_at_inf(seq, v, +1, prefix);
}

int sturm_query_at(const Poly& f, const Poly& g, VarId v, const SamplePoint& prefix,
                   const Rational& a, const Rational& b) {
    auto [fp, d] = prune_at(f, v, prefix);
    if (d <= 0) return 0;
    auto seq = virtual_srem_seq(fp, fp.derivative(v) * g, v, prefix);
    return variations_at_value(seq, v, a, prefix) - variations_at_value(seq, v, b, prefix);
}

void refine_coord(SamplePoint& pt, size_t i) {
    AlgCoord& c = pt.coords[i];
    if (c.exact) return;
    VarId v = pt.order[i];
    // the prefix is pt limited to i coordinates
    SamplePoint prefix{pt.order, {pt.coords.begin(), pt.coords.begin() + i}};
    Rational m = (c.lo + c.hi) / 2;
    int sm = sign_at(c.defpoly.eval_partial(v, m), prefix);
    if (sm == 0) {
        c.exact = true;
        c.value = m;
        c.lo = c.hi = m;
        return;
    }
    if (count_roots_at(c.defpoly, v, prefix, c.lo, m) == 1)
        c.hi = m;
    else
        c.lo = m;
}

void refine_vroot(VRoot& r, VarId v, const SamplePoint& prefix) {
    if (r.lo == r.hi) return;
    Rational m = (r.lo + r.hi) / 2;
    int sm = sign_at(r.defpoly.eval_partial(v, m), prefix);
    if (sm == 0) {
        // rational root: shrink to a tiny interval around it keeping non-root
        // endpoints (width-zero representation would break downstream queries)
        Rational w = (r.hi - r.lo) / 1024;
        Rational lo = m - w, hi = m + w;
        while (sign_at(r.defpoly.eval_partial(v, lo), prefix) == 0) lo = (lo + m) / 2;
        while (sign_at(r.defpoly.eval_partial(v, hi), prefix) == 0) hi = (m + hi) / 2;
        if (lo > r.lo) r.lo = lo;
        if (hi < r.hi) r.hi = hi;
        return;
    }
    if (count_roots_at(r.defpoly, v, prefix, r.lo, m) == 1)
        r.hi = m;
    else
        r.lo = m;
}

namespace {

struct PolyRoots {
    int poly_index;
    Poly pruned;
    std::vector<VRoot> roots;
};

std::vector<VRoot> isolate_one(const Poly& fp, int dv, VarId v, const SamplePoint& prefix) {
    std::vector<VRoot> out;
    if (dv <= 0) return out;
    auto seq = virtual_srem_seq(fp, fp.derivative(v), v, prefix);
    int total = variations_at_inf(seq, v, -1, prefix) - variations_at_inf(seq, v, +1, prefix);
    if (total == 0) return out;
    auto vat = [&](const Rational& t) { return variations_at_value(seq, v, t, prefix); };
    auto val_sign = [&](const Rational& t) {
        return sign_at(fp.eval_partial(v, t), prefix);
    };
    Rational bound(2);
    while (val_sign(-bound) == 0 || val_sign(bound) == 0 ||
           vat(-bound) - vat(bound) != total)
        bound *= 2;
    // bisection; midpoints are probed until they avoid roots
    struct Frame {
        Rational a, b;
        int n;
    };
    std::vector<Frame> stack{{-bound, bound, total}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (fr.n == 1) {
            VRoot r;
            r.defpoly = fp;
            r.lo = fr.a;
            r.hi = fr.b;
            out.push_back(std::move(r));
            continue;
        }
        Rational m = (fr.a + fr.b) / 2;
        Rational step = (fr.b - fr.a) / 64;
        while (val_sign(m) == 0) {  // finitely many roots, probes stay inside
            m += step;
            step /= 2;
        }
        int left = vat(fr.a) - vat(m);
        if (left > 0) stack.push_back({fr.a, m, left});
        if (fr.n - left > 0) stack.push_back({m, fr.b, fr.n - left});
    }
    std::sort(out.begin(), out.end(), [](const VRoot& a, const VRoot& b) { return a.lo < b.lo; });
    return out;
}

bool overlaps(const VRoot& a, const VRoot& b) { return !(a.hi <= b.lo || b.hi <= a.lo); }

}  // namespace

StackRoots isolate_stack_roots(const std::vector<Poly>& level_polys, VarId v,
                               const SamplePoint& prefix) {
    StackRoots out;
    std::vector<PolyRoots> per;
    for (size_t i = 0; i < level_polys.size(); ++i) {
        auto [fp, d] = prune_at(level_polys[i], v, prefix);
        if (d < 0) {
            out.nullified.push_back(static_cast<int>(i));
            continue;
        }
        if (d == 0) continue;  // no roots, nonzero over the stack's base
        PolyRoots pr;
        pr.poly_index = static_cast<int>(i);
        pr.pruned = fp;
        pr.roots = isolate_one(fp, d, v, prefix);
        if (!pr.roots.empty()) per.push_back(std::move(pr));
    }

    // identify coincident roots across polynomials
    size_t nall = 0;
    for (auto& pr : per) nall += pr.roots.size();
    std::vector<std::pair<int, int>> flat;  // (per index, root index)
    for (size_t pi = 0; pi < per.size(); ++pi)
        for (size_t ri = 0; ri < per[pi].roots.size(); ++ri)
            flat.emplace_back(static_cast<int>(pi), static_cast<int>(ri));
    std::vector<int> cls(nall);
    for (size_t i = 0; i < nall; ++i) cls[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (cls[x] != x) x = cls[x] = cls[cls[x]];
        return x;
    };
    auto flat_index = [&](int pi, int ri) {
        int idx = 0;
        for (int k = 0; k < pi; ++k) idx += static_cast<int>(per[k].roots.size());
        return idx + ri;
    };

    for (size_t i = 0; i < per.size(); ++i) {
        for (size_t j = i + 1; j < per.size(); ++j) {
            // number of distinct common real roots via the specialized gcd
            Poly fi = per[i].pruned, fj = per[j].pruned;
            int di = fi.degree_in(v), dj = fj.degree_in(v);
            auto chain = psc_chain(fi, fj, v);
            int l0 = -1;
            for (size_t l = 0; l < chain.size(); ++l) {
                if (sign_at(chain[l], prefix) != 0) {
                    l0 = static_cast<int>(l);
                    break;
                }
            }
            Poly gcd_poly_at;
            if (l0 < 0) {
                gcd_poly_at = dj <= di ? fj : fi;  // the smaller divides the larger
            } else if (l0 == 0) {
                continue;  // nonzero resultant: no common root
            } else {
                gcd_poly_at = subresultant(fi, fj, v, l0);
            }
            int t = count_roots_at(gcd_poly_at, v, prefix);
            if (t == 0) continue;
            // refine until exactly t intersecting pairs remain, each root of i
            // meeting at most one root of j
            for (int guard = 0;; ++guard) {
                if (guard > 400)
                    throw std::logic_error("isolate_stack_roots: root matching diverged");
                std::vector<std::pair<int, int>> hits;
                for (size_t a = 0; a < per[i].roots.size(); ++a)
                    for (size_t b = 0; b < per[j].roots.size(); ++b)
                        if (overlaps(per[i].roots[a], per[j].roots[b]))
                            hits.emplace_back(static_cast<int>(a), static_cast<int>(b));
                bool matching = hits.size() == static_cast<size_t>(t);
                if (matching) {
                    std::set<int> as, bs;
                    for (auto& [a, b] : hits) {
                        matching = matching && as.insert(a).second && bs.insert(b).second;
                    }
                }
                if (matching) {
                    for (auto& [a, b] : hits)
                        cls[find(flat_index(static_cast<int>(i), a))] =
                            find(flat_index(static_cast<int>(j), b));
                    break;
                }
                for (auto& pr : {&per[i], &per[j]})
                    for (auto& r : pr->roots) refine_vroot(r, v, prefix);
            }
        }
    }

    // representatives per class; refine until pairwise disjoint
    std::map<int, VRoot> reps;
    std::map<int, std::set<int>> owners;
    for (size_t k = 0; k < flat.size(); ++k) {
        int c = find(static_cast<int>(k));
        auto [pi, ri] = flat[k];
        if (!reps.count(c)) reps[c] = per[pi].roots[ri];
        owners[c].insert(per[pi].poly_index);
    }
    std::vector<std::pair<int, VRoot>> items(reps.begin(), reps.end());
    bool again = true;
    while (again) {
        again = false;
        for (size_t a = 0; a < items.size() && !again; ++a)
            for (size_t b = a + 1; b < items.size() && !again; ++b)
                if (overlaps(items[a].second, items[b].second)) {
                    refine_vroot(items[a].second, v, prefix);
                    refine_vroot(items[b].second, v, prefix);
                    again = true;
                }
    }
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.second.lo < b.second.lo; });
    for (auto& [c, r] : items) {
        VRoot vr = r;
        vr.vanishing.assign(owners[c].begin(), owners[c].end());
        out.roots.push_back(std::move(vr));
    }
    return out;
}

}  // namespace bsa
