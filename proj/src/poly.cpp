#include "bsa/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bsa {

namespace {
struct VarTable {
    std::mutex mu;
    std::unordered_map<std::string, VarId> ids;
    std::vector<std::string> names;
};
VarTable& vartable() {
    static VarTable t;
    return t;
}
}  // namespace

VarId intern_var(const std::string& name) {
    auto& t = vartable();
    std::lock_guard<std::mutex> lock(t.mu);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    VarId id = static_cast<VarId>(t.names.size());
    t.ids.emplace(name, id);
    t.names.push_back(name);
    return id;
}

const std::string& var_name(VarId v) {
    auto& t = vartable();
    std::lock_guard<std::mutex> lock(t.mu);
    return t.names.at(v);
}

int mono_degree(const Mono& m) {
    int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

int mono_degree_in(const Mono& m, VarId v) {
    for (auto& [w, e] : m)
        if (w == v) return e;
    return 0;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

bool MonoGrlexDesc::operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    // lex on exponent vectors over the global variable order: the earlier
    // variable with a larger exponent wins.
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) {
            // the one holding the smaller VarId has positive exponent there
            return a[i].first < b[j].first ? a[i].second > 0 : !(b[j].second > 0);
        }
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    if (i < a.size()) return true;   // a has an extra (positive) exponent at a smaller slot
    return false;
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.emplace(Mono{}, c);
}

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(Mono{}, Rational(c));
}

Poly Poly::var(VarId v, int exp) {
    Poly p;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) return Poly(1);
    p.terms_.emplace(Mono{{v, exp}}, Rational(1));
    return p;
}

Poly Poly::var(const std::string& name, int exp) { return var(intern_var(name), exp); }

Poly Poly::term(const Rational& c, const Mono& m) {
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value on non-constant poly");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.begin()->first);
}

int Poly::degree_in(VarId v) const {
    int d = -1;
    if (terms_.empty()) return -1;
    d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, mono_degree_in(m, v));
    return d;
}

std::vector<VarId> Poly::vars() const {
    std::set<VarId> s;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m) s.insert(v);
    return std::vector<VarId>(s.begin(), s.end());
}

bool Poly::uses_var(VarId v) const {
    for (auto& [m, c] : terms_)
        if (mono_degree_in(m, v) > 0) return true;
    return false;
}

void Poly::strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Poly Poly::operator-() const {
    Poly p;
    for (auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly p = *this;
    for (auto& [m, c] : o.terms_) {
        auto [it, fresh] = p.terms_.emplace(m, c);
        if (!fresh) it->second += c;
    }
    p.strip_zeros();
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly p;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Mono m = mono_mul(ma, mb);
            auto [it, fresh] = p.terms_.emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    p.strip_zeros();
    return p;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly();
    Poly p;
    for (auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    Poly r(1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

int Poly::compare(const Poly& a, const Poly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    MonoGrlexDesc lt;
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (lt(ia->first, ib->first)) return 1;   // a has the bigger monomial
        if (lt(ib->first, ia->first)) return -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero");
    return terms_.begin()->second;
}

const Mono& Poly::leading_mono() const {
    if (terms_.empty()) throw std::logic_error("leading_mono of zero");
    return terms_.begin()->first;
}

Poly Poly::substitute(VarId v, const Poly& repl) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        Mono rest;
        int e = 0;
        for (auto& [w, k] : m) {
            if (w == v)
                e = k;
            else
                rest.emplace_back(w, k);
        }
        Poly t = Poly::term(c, rest);
        if (e > 0) t *= repl.pow(e);
        out += t;
    }
    return out;
}

Poly Poly::eval_partial(VarId v, const Rational& val) const {
    return substitute(v, Poly(val));
}

Rational Poly::eval(const std::map<VarId, Rational>& point) const {
    Rational sum(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (auto& [v, e] : m) {
            auto it = point.find(v);
            if (it == point.end()) throw std::logic_error("eval: missing variable " + var_name(v));
            for (int i = 0; i < e; ++i) t *= it->second;
        }
        sum += t;
    }
    return sum;
}

Poly Poly::derivative(VarId v) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        int e = mono_degree_in(m, v);
        if (e == 0) continue;
        Mono m2;
        for (auto& [w, k] : m) {
            if (w == v) {
                if (k > 1) m2.emplace_back(w, k - 1);
            } else {
                m2.emplace_back(w, k);
            }
        }
        out += Poly::term(c * e, m2);
    }
    return out;
}

Poly Poly::rename(const std::map<VarId, VarId>& repl) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        Mono m2;
        for (auto& [v, e] : m) {
            auto it = repl.find(v);
            m2.emplace_back(it == repl.end() ? v : it->second, e);
        }
        std::sort(m2.begin(), m2.end());
        auto [it, fresh] = out.terms_.emplace(m2, c);
        if (!fresh) it->second += c;
    }
    out.strip_zeros();
    return out;
}

Poly Poly::negate_vars(const std::set<VarId>& vs) const {
    Poly out;
    for (auto& [m, c] : terms_) {
        int flips = 0;
        for (auto& [v, e] : m)
            if (vs.count(v)) flips += e;
        out += Poly::term(flips % 2 ? -c : c, m);
    }
    return out;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = mono_degree(terms_.begin()->first);
    for (auto& [m, c] : terms_)
        if (mono_degree(m) != d) return false;
    return true;
}

std::optional<std::pair<Rational, Mono>> Poly::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

std::vector<Poly> Poly::coeffs_in(VarId v) const {
    if (terms_.empty()) return {};
    int d = degree_in(v);
    std::vector<Poly> out(d + 1);
    for (auto& [m, c] : terms_) {
        int e = 0;
        Mono rest;
        for (auto& [w, k] : m) {
            if (w == v)
                e = k;
            else
                rest.emplace_back(w, k);
        }
        out[e] += Poly::term(c, rest);
    }
    return out;
}

Poly Poly::from_coeffs_in(VarId v, const std::vector<Poly>& cs) {
    Poly out;
    for (size_t i = 0; i < cs.size(); ++i) out += cs[i] * Poly::var(v, static_cast<int>(i));
    return out;
}

std::vector<Rational> Poly::univariate_coeffs(VarId v) const {
    std::vector<Rational> out(std::max(0, degree_in(v)) + 1, Rational(0));
    if (terms_.empty()) return {Rational(0)};
    for (auto& [m, c] : terms_) {
        int e = 0;
        for (auto& [w, k] : m) {
            if (w == v)
                e = k;
            else
                throw std::logic_error("univariate_coeffs: poly uses other variable " + var_name(w));
        }
        out[e] += c;
    }
    return out;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    Rational lc = leading_coeff();
    return *this * (Rational(1) / lc);
}

Poly Poly::positive_scaled() const {
    if (terms_.empty()) return *this;
    Rational lc = leading_coeff();
    Rational a = abs(lc);
    return *this * (Rational(1) / a);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed_coeff = false;
        if (m.empty() || a != 1) {
            os << a.get_str();
            printed_coeff = true;
        }
        bool firstv = true;
        for (auto& [v, e] : m) {
            if (printed_coeff || !firstv) os << "*";
            firstv = false;
            printed_coeff = true;
            os << var_name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace bsa
