#include "bst/serialize.hpp"

#include "bst/stickelberger.hpp"

namespace bst {

std::string z_str(const mpz_class& z) { return z.get_str(); }

std::string q_str(const mpq_class& q)
{
    mpq_class r = q;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string cyc_str(const cyc& x)
{
    if (x.is_rational()) return q_str(x.rational_value());
    std::string s = "zeta" + std::to_string(x.order) + ":";
    for (size_t i = 0; i < x.c.size(); i++) s += (i ? "," : "") + q_str(x.c[i]);
    return s;
}

static ordered_json longs_json(const std::vector<long>& v)
{
    ordered_json a = ordered_json::array();
    for (long x : v) a.push_back(x);
    return a;
}

static ordered_json imat_json(const imat& m)
{
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; i++) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; j++) row.push_back(z_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json report_json(const verification_report& r)
{
    ordered_json j;
    j["case_id"] = r.vcase.case_id();
    j["theorem"] = r.vcase.theorem;
    ordered_json in;
    if (r.vcase.D != 0) in["D"] = r.vcase.D;
    if (r.vcase.D1 != 0) {
        in["D1"] = r.vcase.D1;
        in["D2"] = r.vcase.D2;
    }
    in["T"] = longs_json(r.vcase.T);
    if (!r.vcase.S_extra.empty()) in["S_extra"] = longs_json(r.vcase.S_extra);
    if (r.vcase.p != 0) in["p"] = r.vcase.p;
    if (r.vcase.split_prime != 0) in["split_prime"] = r.vcase.split_prime;
    j["inputs"] = in;
    j["status"] = r.status;
    if (!r.reason.empty()) j["reason"] = r.reason;
    ordered_json ws = ordered_json::array();
    for (const witness& w : r.witnesses) {
        ordered_json wj;
        wj["name"] = w.name;
        wj["value"] = w.value;
        ws.push_back(wj);
    }
    j["witnesses"] = ws;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

ordered_json classgroup_json(long D)
{
    form_class_group_t cl = form_class_group(D);
    ordered_json j;
    j["D"] = D;
    j["h"] = cl.h();
    j["invariants"] = longs_json(cl.grp.inv);
    ordered_json forms = ordered_json::array();
    for (const quad_form& f : cl.classes) forms.push_back(longs_json({f.a, f.b, f.c}));
    j["reduced_forms"] = forms;
    return j;
}

ordered_json rayclass_json(long D, const std::vector<long>& T)
{
    ray_class_group_t rc = ray_class_group(D, T);
    ordered_json j;
    j["D"] = D;
    j["T"] = longs_json(T);
    j["order"] = rc.order();
    j["invariants"] = longs_json(rc.grp.inv);
    j["conjugation"] = imat_json(rc.mod.action[0]);
    return j;
}

ordered_json theta_json(long D, const std::vector<long>& S_extra, const std::vector<long>& T)
{
    abelian_field_q F = quad_field_q(D);
    std::vector<long> s = F.s_ram;
    s.insert(s.end(), S_extra.begin(), S_extra.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    stickelberger_element th = theta(F, s, T);
    ordered_json j;
    j["D"] = D;
    j["S_finite"] = longs_json(s);
    j["T"] = longs_json(T);
    ordered_json coeffs = ordered_json::array();
    for (const mpq_class& c : th.element.c) coeffs.push_back(q_str(c));
    j["coefficients"] = coeffs;
    j["integral"] = check_integrality(th);
    return j;
}

ordered_json ks_json(long D, const std::vector<long>& T)
{
    abelian_field_q F = quad_field_q(D);
    ideal_lattice I = sinnott_kurihara_ideal(F, T);
    ordered_json j;
    j["D"] = D;
    j["T"] = longs_json(T);
    j["basis"] = imat_json(I.basis);
    j["den"] = z_str(I.den);
    return j;
}

ordered_json qexp_json(const qexpansion& f, long N)
{
    ordered_json j;
    j["k"] = f.k;
    j["level"] = f.level;
    j["psi_modulus"] = f.psi.modulus;
    j["c0"] = cyc_str(f.c0);
    ordered_json coeffs = ordered_json::array();
    for (long m = 1; m <= N; m++) coeffs.push_back(cyc_str(f.c(m)));
    j["coefficients"] = coeffs;
    return j;
}

std::string canonical_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace bst
