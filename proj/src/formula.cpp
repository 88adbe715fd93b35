#include "bsa/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bsa {

namespace {

// Equations and inequations define the same variety when repeated, so they
// deduplicate; strict inequalities are a multiset ([R>0, R>0] and [R>0] have
// different measures, like [P>0, -P>0] does).
void normalize_list(std::vector<Poly>& list, bool sign_matters) {
    for (auto& p : list) {
        if (p.is_zero()) continue;
        p = sign_matters ? p.positive_scaled() : p.monic();
    }
    std::sort(list.begin(), list.end());
    if (!sign_matters) list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace

std::vector<Poly> BasicFormula::all_polys() const {
    std::vector<Poly> out;
    out.insert(out.end(), eqs.begin(), eqs.end());
    out.insert(out.end(), neqs.begin(), neqs.end());
    out.insert(out.end(), pos.begin(), pos.end());
    out.insert(out.end(), geq.begin(), geq.end());
    return out;
}

void BasicFormula::canonicalize() {
    // drop the vacuous 0 = 0; everything else, including trivially false
    // constraints, is kept verbatim (their class is zero by evaluation, not
    // by rewriting)
    eqs.erase(std::remove_if(eqs.begin(), eqs.end(), [](const Poly& p) { return p.is_zero(); }),
              eqs.end());
    normalize_list(eqs, false);
    normalize_list(neqs, false);
    normalize_list(pos, true);
    normalize_list(geq, true);
    std::set<VarId> declared(vars.begin(), vars.end());
    for (const Poly& p : all_polys())
        for (VarId v : p.vars())
            if (!declared.count(v))
                throw ValidationError("constraint uses undeclared variable " + var_name(v));
}

bool BasicFormula::operator==(const BasicFormula& o) const {
    return vars == o.vars && eqs == o.eqs && neqs == o.neqs && pos == o.pos && geq == o.geq;
}

std::string BasicFormula::str() const {
    std::ostringstream os;
    os << "vars";
    for (size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : " ") << var_name(vars[i]);
    os << ";";
    bool first = true;
    auto emit = [&](const std::vector<Poly>& list, const char* rel) {
        for (auto& p : list) {
            os << (first ? " " : ", ") << p.str() << " " << rel << " 0";
            first = false;
        }
    };
    emit(eqs, "=");
    emit(neqs, "!=");
    emit(pos, ">");
    emit(geq, ">=");
    if (first) os << " 0 = 0";
    return os.str();
}

BasicFormula product_formula(const BasicFormula& a, const BasicFormula& b, bool rename) {
    std::set<VarId> avars(a.vars.begin(), a.vars.end());
    std::map<VarId, VarId> repl;
    std::vector<VarId> bvars;
    for (VarId v : b.vars) {
        if (!avars.count(v)) {
            bvars.push_back(v);
            continue;
        }
        if (!rename)
            throw ValidationError("product requires disjoint variables (offending: " +
                                  var_name(v) + "); enable renaming to combine");
        std::string name = var_name(v);
        VarId fresh;
        do {
            name += "'";
            fresh = intern_var(name);
        } while (avars.count(fresh) || std::count(bvars.begin(), bvars.end(), fresh));
        repl[v] = fresh;
        bvars.push_back(fresh);
    }
    BasicFormula out;
    out.vars = a.vars;
    out.vars.insert(out.vars.end(), bvars.begin(), bvars.end());
    out.eqs = a.eqs;
    out.neqs = a.neqs;
    out.pos = a.pos;
    out.geq = a.geq;
    auto append = [&](std::vector<Poly>& dst, const std::vector<Poly>& src) {
        for (auto& p : src) dst.push_back(repl.empty() ? p : p.rename(repl));
    };
    append(out.eqs, b.eqs);
    append(out.neqs, b.neqs);
    append(out.pos, b.pos);
    append(out.geq, b.geq);
    out.canonicalize();
    return out;
}

}  // namespace bsa
