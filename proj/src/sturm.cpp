#include <algorithm>
#include <stdexcept>

#include "bsa/realroot.hpp"

namespace bsa {

namespace {
void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
// positive rescale to keep numbers small; signs everywhere are unaffected
void normalize_scale(UPoly& p) {
    if (p.empty()) return;
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& c : p) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational s(den_lcm, num_gcd);
    s.canonicalize();
    if (s < 0) s = -s;
    for (auto& c : p) c *= s;
}
}  // namespace

UPoly upoly_from(const Poly& p, VarId v) {
    return p.univariate_coeffs(v);
}

int udeg(const UPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

Rational ueval(const UPoly& p, const Rational& x) {
    Rational acc(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (udeg(a) < 0 || udeg(b) < 0) return {};
    UPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

UPoly urem(const UPoly& a, const UPoly& b) {
    int db = udeg(b);
    if (db < 0) throw std::domain_error("urem by zero");
    UPoly r = a;
    trim(r);
    int dr;
    while ((dr = udeg(r)) >= db) {
        Rational q = r[dr] / b[db];
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= q * b[i];
        r[dr] = 0;
        trim(r);
    }
    return r;
}

UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (udeg(b) >= 0) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
        normalize_scale(b);
    }
    int d = udeg(a);
    if (d >= 0) {
        Rational lc = a[d];
        for (auto& c : a) c /= lc;
    }
    return a;
}

UPoly usquarefree(const UPoly& p) {
    int d = udeg(p);
    if (d <= 0) return p;
    UPoly g = ugcd(p, uderiv(p));
    if (udeg(g) == 0) {
        UPoly q = p;
        Rational lc = q[udeg(q)];
        for (auto& c : q) c /= lc;
        return q;
    }
    // exact division p / g
    UPoly r = p, q(udeg(p) - udeg(g) + 1, Rational(0));
    int dg = udeg(g);
    int dr;
    while ((dr = udeg(r)) >= dg) {
        Rational c = r[dr] / g[dg];
        q[dr - dg] = c;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= c * g[i];
    }
    trim(q);
    Rational lc = q[udeg(q)];
    for (auto& c : q) c /= lc;
    return q;
}

std::vector<UPoly> signed_rem_seq(const UPoly& f, const UPoly& g) {
    std::vector<UPoly> seq;
    UPoly a = f, b = g;
    trim(a);
    trim(b);
    seq.push_back(a);
    if (udeg(b) < 0) return seq;
    seq.push_back(b);
    while (true) {
        const UPoly& p0 = seq[seq.size() - 2];
        const UPoly& p1 = seq[seq.size() - 1];
        if (udeg(p1) < 0) break;
        UPoly r = urem(p0, p1);
        if (udeg(r) < 0) break;
        for (auto& c : r) c = -c;
        normalize_scale(r);
        seq.push_back(std::move(r));
    }
    return seq;
}

int variations_at(const std::vector<UPoly>& seq, const Rational& x) {
    int var = 0, last = 0;
    for (auto& p : seq) {
        int s = sgn(ueval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int variations_at_inf(const std::vector<UPoly>& seq, int dir) {
    int var = 0, last = 0;
    for (auto& p : seq) {
        int d = udeg(p);
        if (d < 0) continue;
        int s = sgn(p[d]);
        if (dir < 0 && d % 2) s = -s;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int count_roots(const UPoly& p, const Rational& a, const Rational& b) {
    UPoly sf = usquarefree(p);
    auto seq = signed_rem_seq(sf, uderiv(sf));
    return variations_at(seq, a) - variations_at(seq, b);
}

int count_real_roots(const UPoly& p) {
    UPoly sf = usquarefree(p);
    if (udeg(sf) <= 0) return 0;
    auto seq = signed_rem_seq(sf, uderiv(sf));
    return variations_at_inf(seq, -1) - variations_at_inf(seq, +1);
}

int sturm_query(const UPoly& p, const UPoly& q, const Rational& a, const Rational& b) {
    auto seq = signed_rem_seq(p, umul(uderiv(p), q));
    return variations_at(seq, a) - variations_at(seq, b);
}

Rational root_bound(const UPoly& p) {
    int d = udeg(p);
    if (d < 0) throw std::domain_error("root_bound of zero");
    Rational m(0);
    for (int i = 0; i < d; ++i) {
        Rational r = abs(p[i] / p[d]);
        if (r > m) m = r;
    }
    return m + 1;
}

std::vector<IsolatedRoot> sturm_isolate(const UPoly& p_in, const std::vector<UPoly>& seq,
                                        const UPoly& sf) {
    std::vector<IsolatedRoot> out;
    Rational bound = root_bound(sf);
    auto count = [&](const Rational& a, const Rational& b) {
        return variations_at(seq, a) - variations_at(seq, b);
    };
    // recursive bisection over (a, b]
    struct Frame {
        Rational a, b;
        int n;
    };
    std::vector<Frame> stack;
    int total = count(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    std::vector<IsolatedRoot> found;
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.n == 1) {
            IsolatedRoot r;
            // shrink until endpoints are non-roots; exactness detected on the way
            Rational a = f.a, b = f.b;
            if (ueval(sf, b) == 0) {
                r.exact = true;
                r.value = b;
                r.lo = r.hi = b;
                found.push_back(r);
                continue;
            }
            while (ueval(sf, a) == 0) {
                Rational m = (a + b) / 2;
                if (ueval(sf, m) == 0) {
                    r.exact = true;
                    r.value = m;
                    r.lo = r.hi = m;
                    break;
                }
                if (count(a, m) == 1)
                    b = m;
                else
                    a = m;
            }
            if (!r.exact) {
                r.lo = a;
                r.hi = b;
            }
            found.push_back(r);
            continue;
        }
        Rational m = (f.a + f.b) / 2;
        int left = count(f.a, m);
        if (left > 0) stack.push_back({f.a, m, left});
        if (f.n - left > 0) stack.push_back({m, f.b, f.n - left});
    }
    std::sort(found.begin(), found.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.lo < y.lo; });
    (void)p_in;
    return found;
}

std::vector<IsolatedRoot> sturm_isolate(const UPoly& p) {
    UPoly q = p;
    if (udeg(q) < 0) throw std::domain_error("sturm_isolate: zero polynomial");
    UPoly sf = usquarefree(q);
    if (udeg(sf) == 0) return {};
    auto seq = signed_rem_seq(sf, uderiv(sf));
    return sturm_isolate(p, seq, sf);
}

std::vector<IsolatedRoot> sturm_isolate(const Poly& p, VarId v) {
    if (p.is_zero()) throw std::domain_error("sturm_isolate: zero polynomial");
    return sturm_isolate(upoly_from(p, v));
}

int sign_at_root(const UPoly& defpoly, const IsolatedRoot& r, const UPoly& q) {
    if (r.exact) return sgn(ueval(q, r.value));
    return sturm_query(defpoly, q, r.lo, r.hi);
}

void refine_root(const UPoly& defpoly, IsolatedRoot& r) {
    if (r.exact) return;
    Rational m = (r.lo + r.hi) / 2;
    Rational fm = ueval(defpoly, m);
    if (fm == 0) {
        r.exact = true;
        r.value = m;
        r.lo = r.hi = m;
        return;
    }
    if (sgn(ueval(defpoly, r.lo)) * sgn(fm) < 0)
        r.hi = m;
    else
        r.lo = m;
}

}  // namespace bsa
