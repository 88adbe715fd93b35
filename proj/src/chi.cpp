#include "bsa/chi.hpp"

namespace bsa {

namespace {

VarId fresh_cover_var(int k) {
    // scratch names; canonicalization renames positionally anyway
    return intern_var("_c" + std::to_string(k));
}

ClassExpr chi_rec(const std::vector<VarId>& vars, std::vector<Poly>& eqs, std::vector<Poly>& neqs,
                  std::vector<std::pair<VarId, Poly>>& covers, std::vector<Poly>& pos) {
    if (pos.empty())
        return ClassExpr::from_atom(make_canonical(vars, eqs, neqs, covers));
    Poly r = pos.back();
    pos.pop_back();
    VarId cv = fresh_cover_var(static_cast<int>(covers.size()) + 1);

    covers.emplace_back(cv, r);
    ClassExpr plus = chi_rec(vars, eqs, neqs, covers, pos);
    covers.back().second = -r;
    ClassExpr minus = chi_rec(vars, eqs, neqs, covers, pos);
    covers.pop_back();

    neqs.push_back(r);
    ClassExpr ne = chi_rec(vars, eqs, neqs, covers, pos);
    neqs.pop_back();

    pos.push_back(r);
    return (plus - minus).scaled(Dyadic(1, 2)) + ne.scaled(Dyadic(1, 1));
}

}  // namespace

ClassExpr chi_inductive(const BasicFormula& f) {
    if (!f.is_basic()) throw ValidationError("chi_inductive: expand >= first");
    std::vector<Poly> eqs = f.eqs, neqs = f.neqs, pos = f.pos;
    std::vector<std::pair<VarId, Poly>> covers;
    return chi_rec(f.vars, eqs, neqs, covers, pos);
}

ClassExpr chi_closed_form(const BasicFormula& f) {
    if (!f.is_basic()) throw ValidationError("chi_closed_form: expand >= first");
    int r = static_cast<int>(f.pos.size());
    ClassExpr out;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> in;
        for (int j = 0; j < r; ++j)
            if (mask & (1u << j)) in.push_back(j);
        int i = static_cast<int>(in.size());
        for (unsigned signs = 0; signs < (1u << i); ++signs) {
            std::vector<Poly> eqs = f.eqs, neqs = f.neqs;
            std::vector<std::pair<VarId, Poly>> covers;
            int sign = 1;
            for (int t = 0; t < i; ++t) {
                bool neg = signs & (1u << t);
                if (neg) sign = -sign;
                Poly s = neg ? -f.pos[in[t]] : f.pos[in[t]];
                covers.emplace_back(intern_var("_c" + std::to_string(t + 1)), s);
            }
            for (int j = 0; j < r; ++j)
                if (!(mask & (1u << j))) neqs.push_back(f.pos[j]);
            Dyadic coeff(sign, static_cast<unsigned>(r + i));
            out += ClassExpr::from_atom(make_canonical(f.vars, eqs, neqs, covers), coeff);
        }
    }
    return out;
}

std::vector<BasicFormula> expand_geq(const BasicFormula& f) {
    std::vector<BasicFormula> out;
    out.push_back(f);
    out.back().geq.clear();
    for (const Poly& r : f.geq) {
        std::vector<BasicFormula> next;
        for (auto& g : out) {
            BasicFormula gt = g;
            gt.pos.push_back(r);
            BasicFormula eq = g;
            eq.eqs.push_back(r);
            next.push_back(std::move(gt));
            next.push_back(std::move(eq));
        }
        out = std::move(next);
    }
    for (auto& g : out) g.canonicalize();
    return out;
}

ClassExpr chi_formula(const BasicFormula& f) {
    ClassExpr out;
    for (auto& g : expand_geq(f)) out += chi_closed_form(g);
    return out;
}

ClassExpr eliminate_neq(const ClassExpr& c) {
    ClassExpr out;
    for (auto& [atom, coeff] : c.terms()) {
        if (!atom.desc || !atom.desc->has_neqs()) {
            out.add_term(atom, coeff);
            continue;
        }
        const VarietyDescriptor& d = *atom.desc;
        size_t q = d.neqs.size();
        ClassExpr expanded;
        for (unsigned mask = 0; mask < (1u << q); ++mask) {
            std::vector<Poly> eqs = d.eqs;
            int sign = 1;
            for (size_t j = 0; j < q; ++j)
                if (mask & (1u << j)) {
                    eqs.push_back(d.neqs[j]);
                    sign = -sign;
                }
            std::vector<VarId> vars;
            for (int i = 1; i <= d.nbase; ++i) vars.push_back(canon_base_var(i));
            std::vector<std::pair<VarId, Poly>> covers;
            for (size_t k = 0; k < d.covers.size(); ++k)
                covers.emplace_back(canon_cover_var(static_cast<int>(k) + 1), d.covers[k]);
            ClassExpr piece =
                ClassExpr::from_atom(make_canonical(vars, eqs, {}, covers), Dyadic(sign));
            expanded += piece.mul_lpow(atom.lpow);
        }
        out += expanded.scaled(coeff);
    }
    return out;
}

}  // namespace bsa
