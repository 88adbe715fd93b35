#include <algorithm>
#include <stdexcept>

#include "bsa/polyops.hpp"

namespace bsa {

namespace {

// Does monomial a divide b?
bool mono_divides(const Mono& a, const Mono& b) {
    size_t j = 0;
    for (auto& [v, e] : a) {
        while (j < b.size() && b[j].first < v) ++j;
        if (j == b.size() || b[j].first != v || b[j].second < e) return false;
    }
    return true;
}

Mono mono_quot(const Mono& b, const Mono& a) {
    Mono out;
    size_t j = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        int e = b[i].second;
        while (j < a.size() && a[j].first < b[i].first) ++j;
        if (j < a.size() && a[j].first == b[i].first) e -= a[j].second;
        if (e > 0) out.emplace_back(b[i].first, e);
    }
    return out;
}

}  // namespace

std::optional<Poly> try_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) return std::nullopt;
    Poly rem = f, quot;
    const Mono& gm = g.leading_mono();
    const Rational& gc = g.leading_coeff();
    while (!rem.is_zero()) {
        const Mono& rm = rem.leading_mono();
        if (!mono_divides(gm, rm)) return std::nullopt;
        Poly t = Poly::term(rem.leading_coeff() / gc, mono_quot(rm, gm));
        quot += t;
        rem -= t * g;
    }
    return quot;
}

Poly divide_exact(const Poly& f, const Poly& g) {
    auto q = try_divide(f, g);
    if (!q) throw std::domain_error("divide_exact: not divisible");
    return *q;
}

Poly pseudo_rem(const Poly& a, const Poly& b, VarId v) {
    int db = b.degree_in(v);
    if (db < 0) throw std::domain_error("pseudo_rem by zero");
    auto bc = b.coeffs_in(v);
    Poly lcb = bc[db];
    Poly rem = a;
    int da = rem.degree_in(v);
    int steps = da - db + 1;
    if (steps <= 0) return a;
    while (!rem.is_zero() && (da = rem.degree_in(v)) >= db) {
        auto rc = rem.coeffs_in(v);
        Poly lead = rc[da];
        rem = rem * lcb - lead * b * Poly::var(v, da - db);
        --steps;
    }
    // pad so the multiplier is exactly lc^(deg a - deg b + 1)
    for (; steps > 0; --steps) rem = rem * lcb;
    return rem;
}

Rational rational_content(const Poly& f) {
    if (f.is_zero()) return Rational(1);
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly content_in(const Poly& f, VarId v) {
    Poly g;
    for (auto& c : f.coeffs_in(v)) {
        if (c.is_zero()) continue;
        g = gcd_poly(g, c);
        if (g.is_constant() && !g.is_zero()) return Poly(1);
    }
    return g;
}

Poly primitive_part_in(const Poly& f, VarId v) {
    if (f.is_zero()) return f;
    return divide_exact(f, content_in(f, v));
}

namespace {

// Subresultant PRS; returns the last nonzero element (gcd up to content).
Poly prs_last(Poly a, Poly b, VarId v) {
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    Poly g(1), h(1);
    while (true) {
        int da = a.degree_in(v), db = b.degree_in(v);
        int delta = da - db;
        Poly r = pseudo_rem(a, b, v);
        if (r.is_zero()) return b;
        if (r.degree_in(v) == 0) return r;
        a = b;
        Poly divisor = g * h.pow(delta);
        b = divide_exact(r, divisor);
        g = a.coeffs_in(v)[a.degree_in(v)];
        if (delta > 0) h = divide_exact(g.pow(delta), h.pow(delta - 1));
    }
}

}  // namespace

Poly gcd_poly(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.is_zero() ? g : g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return Poly(1);
    auto fv = f.vars(), gv = g.vars();
    std::vector<VarId> common;
    std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(), std::back_inserter(common));
    if (common.empty()) return Poly(1);
    VarId v = common.back();
    Poly cf = content_in(f, v), cg = content_in(g, v);
    Poly pf = divide_exact(f, cf), pg = divide_exact(g, cg);
    Poly last = prs_last(pf, pg, v);
    Poly pp = last.degree_in(v) > 0 ? primitive_part_in(last, v) : Poly(1);
    return (gcd_poly(cf, cg) * pp).monic();
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero() || f.is_constant()) return f;
    Poly g;
    for (VarId v : f.vars()) {
        Poly d = f.derivative(v);
        if (d.is_zero()) continue;
        g = g.is_zero() ? gcd_poly(f, d) : gcd_poly(g, d);
        if (g.is_constant()) return f.monic();
    }
    if (g.is_zero() || g.is_constant()) return f.monic();
    return divide_exact(f, g).monic();
}

Poly poly_det(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly(1);
    Poly prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

namespace {

// Rows of the order-j subresultant matrix: coefficient rows of v^(db-j-1-i)*f
// and v^(da-j-1-i)*g over degrees da+db-j-1 .. 0.
std::vector<std::vector<Poly>> subres_rows(const Poly& f, const Poly& g, VarId v, int j,
                                           int da, int db) {
    auto fc = f.coeffs_in(v);
    auto gc = g.coeffs_in(v);
    int width = da + db - j;
    std::vector<std::vector<Poly>> rows;
    auto add_rows = [&](const std::vector<Poly>& cs, int deg, int count) {
        for (int i = 0; i < count; ++i) {
            // coefficients of v^(count-1-i) * p laid out by descending degree
            std::vector<Poly> row(width);
            int shift = count - 1 - i;
            for (int d = 0; d <= deg; ++d) {
                int col = width - 1 - (d + shift);
                if (col >= 0 && col < width) row[col] = cs[d];
            }
            rows.push_back(std::move(row));
        }
    };
    add_rows(fc, da, db - j);
    add_rows(gc, db, da - j);
    return rows;
}

}  // namespace

Poly subresultant(const Poly& f, const Poly& g, VarId v, int j) {
    int da = f.degree_in(v), db = g.degree_in(v);
    if (da < 0 || db < 0) throw std::domain_error("subresultant: zero input");
    if (j >= std::min(da, db)) throw std::domain_error("subresultant: index too large");
    auto rows = subres_rows(f, g, v, j, da, db);
    int width = da + db - j;
    int nrows = da + db - 2 * j;
    Poly out;
    for (int k = j; k >= 0; --k) {
        // square matrix: the first nrows-1 columns plus the column of degree k
        std::vector<std::vector<Poly>> m(nrows, std::vector<Poly>(nrows));
        for (int r = 0; r < nrows; ++r) {
            for (int c = 0; c + 1 < nrows; ++c) m[r][c] = rows[r][c];
            m[r][nrows - 1] = rows[r][width - 1 - k];
        }
        out += poly_det(std::move(m)) * Poly::var(v, k);
    }
    return out;
}

std::vector<Poly> psc_chain(const Poly& f, const Poly& g, VarId v) {
    int da = f.degree_in(v), db = g.degree_in(v);
    if (da < 0 || db < 0) throw std::domain_error("psc_chain: zero input");
    std::vector<Poly> out;
    for (int j = 0; j < std::min(da, db); ++j) {
        auto rows = subres_rows(f, g, v, j, da, db);
        int nrows = da + db - 2 * j;
        std::vector<std::vector<Poly>> m(nrows, std::vector<Poly>(nrows));
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < nrows; ++c) m[r][c] = rows[r][c];
        out.push_back(poly_det(std::move(m)));
    }
    return out;
}

Poly resultant(const Poly& f, const Poly& g, VarId v) {
    if (!f.uses_var(v) || !g.uses_var(v))
        throw std::domain_error("resultant: input constant in the eliminated variable");
    int da = f.degree_in(v), db = g.degree_in(v);
    auto fc = f.coeffs_in(v);
    auto gc = g.coeffs_in(v);
    int n = da + db;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < db; ++i)
        for (int d = 0; d <= da; ++d) m[i][n - 1 - (d + db - 1 - i)] = fc[d];
    for (int i = 0; i < da; ++i)
        for (int d = 0; d <= db; ++d) m[db + i][n - 1 - (d + da - 1 - i)] = gc[d];
    return poly_det(std::move(m));
}

std::optional<Poly> poly_sqrt(const Poly& f) {
    if (f.is_zero()) return Poly();
    // leading term must be a perfect square
    const Mono& lm = f.leading_mono();
    const Rational& lc = f.leading_coeff();
    if (lc < 0) return std::nullopt;
    Mono half;
    for (auto& [v, e] : lm) {
        if (e % 2) return std::nullopt;
        half.emplace_back(v, e / 2);
    }
    Rational lr(0);
    {
        Integer rn, rd;
        if (!mpz_perfect_square_p(lc.get_num().get_mpz_t())) return std::nullopt;
        if (!mpz_perfect_square_p(lc.get_den().get_mpz_t())) return std::nullopt;
        mpz_sqrt(rn.get_mpz_t(), lc.get_num().get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), lc.get_den().get_mpz_t());
        lr = Rational(rn, rd);
        lr.canonicalize();
    }
    Poly p = Poly::term(lr, half);
    size_t guard = 4 * (f.term_count() + 2) * (f.term_count() + 2);
    while (guard--) {
        Poly s = f - p * p;
        if (s.is_zero()) return p;
        // next term: lt(s) / (2 lt(p))
        const Mono& sm = s.leading_mono();
        Mono pm2 = p.leading_mono();
        if (!mono_divides(pm2, sm)) return std::nullopt;
        Poly t = Poly::term(s.leading_coeff() / (2 * p.leading_coeff()), mono_quot(sm, pm2));
        MonoGrlexDesc lt;
        // must strictly decrease to terminate
        if (!lt(p.leading_mono(), t.leading_mono()) && !(p.leading_mono() == t.leading_mono()))
            return std::nullopt;
        p += t;
    }
    return std::nullopt;
}

}  // namespace bsa
