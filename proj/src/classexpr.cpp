#include "bsa/classexpr.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace bsa {

namespace {
constexpr int kPreinterned = 64;
struct CanonNames {
    std::vector<VarId> base, cover;
    CanonNames() {
        for (int i = 1; i <= kPreinterned; ++i) base.push_back(intern_var("x" + std::to_string(i)));
        for (int i = 1; i <= kPreinterned; ++i) cover.push_back(intern_var("y" + std::to_string(i)));
    }
};
CanonNames& canon_names() {
    static CanonNames n;
    return n;
}
}  // namespace

VarId canon_base_var(int i) {
    auto& n = canon_names();
    if (i <= kPreinterned) return n.base[i - 1];
    return intern_var("x" + std::to_string(i));
}

VarId canon_cover_var(int i) {
    auto& n = canon_names();
    if (i <= kPreinterned) return n.cover[i - 1];
    return intern_var("y" + std::to_string(i));
}

bool VarietyDescriptor::operator==(const VarietyDescriptor& o) const {
    return nbase == o.nbase && ncover == o.ncover && eqs == o.eqs && neqs == o.neqs &&
           covers == o.covers;
}

int VarietyDescriptor::compare(const VarietyDescriptor& a, const VarietyDescriptor& b) {
    if (a.nbase != b.nbase) return a.nbase < b.nbase ? -1 : 1;
    if (a.ncover != b.ncover) return a.ncover < b.ncover ? -1 : 1;
    auto cmp_list = [](const std::vector<Poly>& x, const std::vector<Poly>& y) {
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        for (size_t i = 0; i < x.size(); ++i) {
            int c = Poly::compare(x[i], y[i]);
            if (c) return c;
        }
        return 0;
    };
    if (int c = cmp_list(a.eqs, b.eqs)) return c;
    if (int c = cmp_list(a.neqs, b.neqs)) return c;
    return cmp_list(a.covers, b.covers);
}

BasicFormula VarietyDescriptor::to_formula() const {
    BasicFormula f;
    for (int i = 1; i <= nbase; ++i) f.vars.push_back(canon_base_var(i));
    for (int k = 1; k <= ncover; ++k) f.vars.push_back(canon_cover_var(k));
    f.eqs = eqs;
    for (int k = 1; k <= ncover; ++k)
        f.eqs.push_back(Poly::var(canon_cover_var(k), 2) - covers[k - 1]);
    f.neqs = neqs;
    f.canonicalize();
    return f;
}

std::string VarietyDescriptor::str() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    auto emit = [&](const Poly& p, const char* rel) {
        os << (first ? "" : ", ") << p.str() << rel;
        first = false;
    };
    for (auto& p : eqs) emit(p, " = 0");
    for (auto& p : neqs) emit(p, " != 0");
    for (int k = 1; k <= ncover; ++k) {
        os << (first ? "" : ", ") << var_name(canon_cover_var(k)) << "^2 = "
           << covers[k - 1].str();
        first = false;
    }
    if (first) os << "pt";
    os << "]";
    return os.str();
}

namespace {

struct RawBlock {
    std::vector<VarId> vars;  // inherited order
    std::vector<Poly> eqs, neqs;
    std::vector<Poly> covers;  // S polynomials, vars within this block
};

// Renames block variables positionally starting at base index `b0`, sorts the
// constraint lists. Cover S order fixes cover numbering (covers carry no
// in-block variables of their own).
VarietyDescriptor block_descriptor(const RawBlock& blk, bool negate) {
    std::map<VarId, VarId> repl;
    for (size_t i = 0; i < blk.vars.size(); ++i)
        repl[blk.vars[i]] = canon_base_var(static_cast<int>(i) + 1);
    std::set<VarId> negs;
    for (size_t i = 0; i < blk.vars.size(); ++i) negs.insert(canon_base_var(static_cast<int>(i) + 1));
    VarietyDescriptor d;
    d.nbase = static_cast<int>(blk.vars.size());
    d.ncover = static_cast<int>(blk.covers.size());
    auto conv = [&](const Poly& p, bool monicize) {
        Poly q = p.rename(repl);
        if (negate) q = q.negate_vars(negs);
        return monicize && !q.is_zero() ? q.monic() : q;
    };
    for (auto& p : blk.eqs) d.eqs.push_back(conv(p, true));
    for (auto& p : blk.neqs) d.neqs.push_back(conv(p, true));
    for (auto& p : blk.covers) d.covers.push_back(conv(p, false));
    std::sort(d.eqs.begin(), d.eqs.end());
    d.eqs.erase(std::unique(d.eqs.begin(), d.eqs.end()), d.eqs.end());
    std::sort(d.neqs.begin(), d.neqs.end());
    d.neqs.erase(std::unique(d.neqs.begin(), d.neqs.end()), d.neqs.end());
    std::sort(d.covers.begin(), d.covers.end());  // multiset, duplicates kept
    return d;
}

}  // namespace

CanonicalAtom make_canonical(const std::vector<VarId>& base_vars, std::vector<Poly> eqs,
                             std::vector<Poly> neqs,
                             std::vector<std::pair<VarId, Poly>> covers) {
    CanonicalAtom out;

    // constant cleanup
    {
        std::vector<Poly> keep;
        for (auto& p : eqs) {
            if (p.is_zero()) continue;  // 0 = 0
            if (p.is_constant()) {      // c = 0 with c != 0: empty as a scheme
                out.zero = true;
                return out;
            }
            keep.push_back(p.monic());
        }
        eqs = std::move(keep);
        keep.clear();
        for (auto& p : neqs) {
            if (p.is_zero()) {  // 0 != 0
                out.zero = true;
                return out;
            }
            if (p.is_constant()) continue;  // c != 0 vacuous
            keep.push_back(p.monic());
        }
        neqs = std::move(keep);
    }

    // cover detection: a variable occurring in exactly one constraint, there
    // as a*v^2 + S with constant a and S free of v, is a double-cover variable
    {
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<VarId, int> occ;
            auto count = [&](const Poly& p) {
                for (VarId v : p.vars()) occ[v]++;
            };
            for (auto& p : eqs) count(p);
            for (auto& p : neqs) count(p);
            for (auto& [cv, s] : covers) count(s);
            for (size_t i = 0; i < eqs.size() && !changed; ++i) {
                for (VarId v : eqs[i].vars()) {
                    if (occ[v] != 1) continue;
                    if (eqs[i].degree_in(v) != 2) continue;
                    auto cs = eqs[i].coeffs_in(v);
                    if (!cs[1].is_zero()) continue;
                    if (!cs[2].is_constant()) continue;
                    Rational a = cs[2].constant_value();
                    covers.emplace_back(v, cs[0] * (Rational(-1) / a));
                    eqs.erase(eqs.begin() + i);
                    changed = true;
                    break;
                }
            }
        }
    }

    // cheap inconsistency: two monic equations differing by a nonzero constant
    for (size_t i = 0; i < eqs.size(); ++i)
        for (size_t j = i + 1; j < eqs.size(); ++j) {
            Poly d = eqs[i] - eqs[j];
            if (!d.is_zero() && d.is_constant()) {
                out.zero = true;
                return out;
            }
        }

    // block decomposition over base variables; cover constraints glue the
    // variables of their S polynomial together
    std::set<VarId> cover_ids;
    for (auto& [cv, s] : covers) cover_ids.insert(cv);
    std::vector<VarId> base;
    for (VarId v : base_vars)
        if (!cover_ids.count(v)) base.push_back(v);

    std::map<VarId, int> comp;  // var -> component id
    int ncomp = 0;
    for (VarId v : base) comp[v] = ncomp++;
    // union-find (small, path halving not needed)
    std::vector<int> parent(ncomp);
    for (int i = 0; i < ncomp; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto link_poly = [&](const Poly& p) {
        auto vs = p.vars();
        for (size_t k = 1; k < vs.size(); ++k) unite(comp[vs[0]], comp[vs[k]]);
    };
    for (auto& p : eqs) link_poly(p);
    for (auto& p : neqs) link_poly(p);
    for (auto& [cv, s] : covers) link_poly(s);

    // assemble blocks in inherited variable order; constraints with no base
    // variables form their own blocks
    std::map<int, RawBlock> blocks;
    std::vector<int> block_order;
    std::set<VarId> constrained;
    for (auto& p : eqs)
        for (VarId v : p.vars()) constrained.insert(v);
    for (auto& p : neqs)
        for (VarId v : p.vars()) constrained.insert(v);
    for (auto& [cv, s] : covers)
        for (VarId v : s.vars()) constrained.insert(v);

    long lpow = 0;
    for (VarId v : base) {
        if (!constrained.count(v)) {
            ++lpow;  // unconstrained direction: a factor of L
            continue;
        }
        int c = find(comp[v]);
        if (!blocks.count(c)) block_order.push_back(c);
        blocks[c].vars.push_back(v);
    }
    std::vector<RawBlock> loose;  // constraints without base variables
    auto place = [&](const Poly& p, int which /*0 eq,1 neq,2 cover*/) {
        auto vs = p.vars();
        RawBlock* tgt;
        if (vs.empty()) {
            loose.emplace_back();
            tgt = &loose.back();
        } else {
            tgt = &blocks[find(comp[vs[0]])];
        }
        if (which == 0) tgt->eqs.push_back(p);
        else if (which == 1) tgt->neqs.push_back(p);
        else tgt->covers.push_back(p);
    };
    for (auto& p : eqs) place(p, 0);
    for (auto& p : neqs) place(p, 1);
    for (auto& [cv, s] : covers) place(s, 2);

    std::vector<VarietyDescriptor> parts;
    auto canon_block = [&](const RawBlock& blk) {
        VarietyDescriptor plain = block_descriptor(blk, false);
        VarietyDescriptor flipped = block_descriptor(blk, true);
        return VarietyDescriptor::compare(flipped, plain) < 0 ? flipped : plain;
    };
    for (int c : block_order) parts.push_back(canon_block(blocks[c]));
    for (auto& blk : loose) parts.push_back(canon_block(blk));
    std::sort(parts.begin(), parts.end());

    if (parts.empty()) {
        out.lpow = lpow;
        return out;
    }

    // concatenate blocks with a global positional renaming
    VarietyDescriptor d;
    for (auto& b : parts) {
        std::map<VarId, VarId> repl;
        for (int i = 1; i <= b.nbase; ++i)
            repl[canon_base_var(i)] = canon_base_var(d.nbase + i);
        for (auto& p : b.eqs) d.eqs.push_back(p.rename(repl));
        for (auto& p : b.neqs) d.neqs.push_back(p.rename(repl));
        for (auto& p : b.covers) d.covers.push_back(p.rename(repl));
        d.nbase += b.nbase;
        d.ncover += b.ncover;
    }
    std::sort(d.eqs.begin(), d.eqs.end());
    std::sort(d.neqs.begin(), d.neqs.end());
    std::sort(d.covers.begin(), d.covers.end());
    out.lpow = lpow;
    out.desc = std::move(d);
    return out;
}

CanonicalAtom descriptor_of_formula(const BasicFormula& f) {
    if (!f.pos.empty() || !f.geq.empty())
        throw ValidationError("descriptor_of_formula: formula has inequalities");
    return make_canonical(f.vars, f.eqs, f.neqs, {});
}

bool Atom::operator==(const Atom& o) const {
    return lpow == o.lpow && desc.has_value() == o.desc.has_value() &&
           (!desc || *desc == *o.desc);
}

bool Atom::operator<(const Atom& o) const {
    if (desc.has_value() != o.desc.has_value()) return !desc.has_value();
    if (!desc) return lpow > o.lpow;  // higher powers of L first
    int c = VarietyDescriptor::compare(*desc, *o.desc);
    if (c) return c < 0;
    return lpow > o.lpow;
}

std::string Atom::str() const {
    std::string ls;
    if (lpow == 1) ls = "L";
    else if (lpow != 0) ls = "L^" + std::to_string(lpow);
    if (!desc) return ls.empty() ? "1" : ls;
    std::string ds = desc->str();
    return ls.empty() ? ds : ls + "*" + ds;
}

ClassExpr ClassExpr::lpower(long k) {
    ClassExpr e;
    e.terms_.emplace(Atom{std::nullopt, k}, Dyadic(1));
    return e;
}

ClassExpr ClassExpr::from_atom(const CanonicalAtom& a, const Dyadic& c) {
    ClassExpr e;
    if (a.zero || c.is_zero()) return e;
    e.terms_.emplace(Atom{a.desc, a.lpow}, c);
    return e;
}

ClassExpr ClassExpr::from_descriptor(const VarietyDescriptor& d) {
    ClassExpr e;
    e.terms_.emplace(Atom{d, 0}, Dyadic(1));
    return e;
}

void ClassExpr::add_term(const Atom& a, const Dyadic& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ClassExpr ClassExpr::operator-() const {
    ClassExpr e;
    for (auto& [a, c] : terms_) e.terms_.emplace(a, -c);
    return e;
}

ClassExpr ClassExpr::operator+(const ClassExpr& o) const {
    ClassExpr e = *this;
    for (auto& [a, c] : o.terms_) e.add_term(a, c);
    return e;
}

ClassExpr ClassExpr::operator-(const ClassExpr& o) const { return *this + (-o); }

ClassExpr ClassExpr::scaled(const Dyadic& c) const {
    ClassExpr e;
    if (c.is_zero()) return e;
    for (auto& [a, k] : terms_) e.terms_.emplace(a, k * c);
    return e;
}

ClassExpr ClassExpr::mul_lpow(long k) const {
    ClassExpr e;
    for (auto& [a, c] : terms_) e.terms_.emplace(Atom{a.desc, a.lpow + k}, c);
    return e;
}

ClassExpr descriptor_product(const VarietyDescriptor& a, const VarietyDescriptor& b) {
    // concatenate blocks: shift b's base vars and all cover vars
    std::vector<VarId> vars;
    std::vector<Poly> eqs, neqs;
    std::vector<std::pair<VarId, Poly>> covers;
    for (int i = 1; i <= a.nbase; ++i) vars.push_back(canon_base_var(i));
    std::map<VarId, VarId> repl;
    for (int i = 1; i <= b.nbase; ++i) {
        repl[canon_base_var(i)] = canon_base_var(a.nbase + i);
        vars.push_back(canon_base_var(a.nbase + i));
    }
    eqs = a.eqs;
    neqs = a.neqs;
    for (auto& p : b.eqs) eqs.push_back(p.rename(repl));
    for (auto& p : b.neqs) neqs.push_back(p.rename(repl));
    int k = 0;
    for (auto& s : a.covers) covers.emplace_back(canon_cover_var(++k), s);
    for (auto& s : b.covers) covers.emplace_back(canon_cover_var(++k), s.rename(repl));
    CanonicalAtom atom = make_canonical(vars, std::move(eqs), std::move(neqs), std::move(covers));
    return ClassExpr::from_atom(atom);
}

ClassExpr ClassExpr::operator*(const ClassExpr& o) const {
    ClassExpr out;
    for (auto& [a, ca] : terms_) {
        for (auto& [b, cb] : o.terms_) {
            Dyadic c = ca * cb;
            if (!a.desc && !b.desc) {
                out.add_term(Atom{std::nullopt, a.lpow + b.lpow}, c);
            } else if (a.desc && b.desc) {
                ClassExpr prod = descriptor_product(*a.desc, *b.desc).mul_lpow(a.lpow + b.lpow);
                out += prod.scaled(c);
            } else {
                const Atom& d = a.desc ? a : b;
                out.add_term(Atom{d.desc, a.lpow + b.lpow}, c);
            }
        }
    }
    return out;
}

bool ClassExpr::is_l_polynomial() const {
    for (auto& [a, c] : terms_)
        if (a.desc) return false;
    return true;
}

std::string ClassExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [a, c] : terms_) {
        Dyadic k = c;
        if (first) {
            if (k.sign() < 0) {
                os << "-";
                k = -k;
            }
        } else {
            os << (k.sign() < 0 ? " - " : " + ");
            if (k.sign() < 0) k = -k;
        }
        first = false;
        std::string as = a.str();
        bool unit_coeff = (k == Dyadic(1));
        if (as == "1") {
            os << k.str();
        } else if (unit_coeff) {
            os << as;
        } else {
            os << k.str() << "*" << as;
        }
    }
    return os.str();
}

}  // namespace bsa
