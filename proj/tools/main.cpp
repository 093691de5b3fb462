#include "bst/serialize.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

using namespace bst;
namespace fs = std::filesystem;

static std::vector<long> parse_longs(const std::string& s)
{
    std::vector<long> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

/* ---- verify ------------------------------------------------------------- */

static verification_report run_case(const verification_case& c)
{
    if (c.theorem == "brumer-stark") return check_brumer_stark(c);
    if (c.theorem == "cnf") return check_cnf(c);
    if (c.theorem == "kurihara") return check_kurihara(c);
    if (c.theorem == "bs-unit") return brumer_stark_unit(c);
    if (c.theorem == "selmer") return check_selmer_duality(c);
    throw CLI::ValidationError("theorem", "unknown theorem " + c.theorem);
}

struct verify_opts {
    std::string theorem;
    long d = 0, d1 = 0, d2 = 0, disc_max = 0, p = 0, prime = 0, jobs = 1;
    std::string t_str, s_str, out_dir;
};

static std::vector<verification_case> expand_cases(const verify_opts& o)
{
    static const std::vector<std::string> known = {"brumer-stark", "cnf", "kurihara",
                                                   "bs-unit", "selmer"};
    if (std::find(known.begin(), known.end(), o.theorem) == known.end())
        throw CLI::ValidationError("theorem", "unknown theorem " + o.theorem);
    verification_case base;
    base.theorem = o.theorem;
    base.T = parse_longs(o.t_str);
    base.S_extra = parse_longs(o.s_str);
    base.p = o.p;
    base.split_prime = o.prime;
    if (base.T.empty()) throw CLI::ValidationError("--T", "a nonempty T set is required");

    std::vector<verification_case> cases;
    if (o.d1 != 0 || o.d2 != 0) {
        if (o.d1 == 0 || o.d2 == 0)
            throw CLI::ValidationError("--d1/--d2", "both biquadratic discriminants required");
        base.D1 = o.d1;
        base.D2 = o.d2;
        cases.push_back(base);
    } else if (o.d != 0) {
        base.D = o.d;
        cases.push_back(base);
    } else if (o.disc_max > 0) {
        for (long D = -3; D >= -o.disc_max; D--) {
            if (!is_fundamental_discriminant(D)) continue;
            base.D = D;
            cases.push_back(base);
        }
    } else {
        throw CLI::ValidationError("--d", "give --d, --d1/--d2, or --disc-max");
    }
    for (const verification_case& c : cases) {
        if (c.theorem == "kurihara" && c.p == 0)
            throw CLI::ValidationError("--p", "kurihara needs a prime p");
        if (c.theorem == "bs-unit" && c.split_prime == 0)
            throw CLI::ValidationError("--prime", "bs-unit needs a split prime");
    }
    return cases;
}

static int cmd_verify(const verify_opts& o)
{
    std::vector<verification_case> cases = expand_cases(o);
    std::vector<verification_report> reports(cases.size());
    long jobs = std::max(1L, o.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < cases.size(); i++) reports[i] = run_case(cases[i]);
    } else {
        std::vector<std::thread> pool;
        for (long w = 0; w < jobs; w++)
            pool.emplace_back([&, w] {
                for (size_t i = (size_t)w; i < cases.size(); i += (size_t)jobs)
                    reports[i] = run_case(cases[i]);
            });
        for (std::thread& t : pool) t.join();
    }

    long pass = 0, fail = 0, skipped = 0;
    for (const verification_report& r : reports) {
        if (r.status == "pass") pass++;
        else if (r.status == "skipped") skipped++;
        else fail++;
        ordered_json j = report_json(r);
        if (!o.out_dir.empty()) {
            fs::create_directories(o.out_dir);
            std::ofstream f(fs::path(o.out_dir) / (r.vcase.case_id() + ".json"));
            f << canonical_dump(j);
        } else {
            std::cout << canonical_dump(j);
        }
    }
    ordered_json sum;
    sum["theorem"] = o.theorem;
    sum["cases"] = (long)reports.size();
    sum["pass"] = pass;
    sum["fail"] = fail;
    sum["skipped"] = skipped;
    if (!o.out_dir.empty()) {
        std::ofstream f(fs::path(o.out_dir) / "summary.json");
        f << canonical_dump(sum);
    }
    std::cout << canonical_dump(sum);
    return fail == 0 ? 0 : 1;
}

/* ---- oracle ------------------------------------------------------------- */

struct oracle_entry {
    std::string name;
    std::function<ordered_json()> make;
};

static std::vector<oracle_entry> oracle_table()
{
    auto qexp_e4 = [] { return qexp_json(eisenstein_qexp(4, trivial_character(1), {}), 200); };
    auto qexp_e1 = [] { return qexp_json(eisenstein_qexp(1, quadratic_character(-4), {}), 200); };
    auto qexp_w1 = [] { return qexp_json(w_modified(1, quadratic_character(-4), {}, {3}), 200); };
    return {
        {"classgroup_D-4", [] { return classgroup_json(-4); }},
        {"classgroup_D-15", [] { return classgroup_json(-15); }},
        {"classgroup_D-23", [] { return classgroup_json(-23); }},
        {"classgroup_D-31", [] { return classgroup_json(-31); }},
        {"classgroup_D-47", [] { return classgroup_json(-47); }},
        {"rayclass_D-3_T7", [] { return rayclass_json(-3, {7}); }},
        {"rayclass_D-4_T3", [] { return rayclass_json(-4, {3}); }},
        {"rayclass_D-23_T3", [] { return rayclass_json(-23, {3}); }},
        {"rayclass_D-47_T3", [] { return rayclass_json(-47, {3}); }},
        {"theta_D-3_T7", [] { return theta_json(-3, {}, {7}); }},
        {"theta_D-23_T3", [] { return theta_json(-23, {}, {3}); }},
        {"theta_D-47_T3", [] { return theta_json(-47, {}, {3}); }},
        {"ks_D-4_T3", [] { return ks_json(-4, {3}); }},
        {"ks_D-23_T3", [] { return ks_json(-23, {3}); }},
        {"qexp_E4", qexp_e4},
        {"qexp_E1_m4", qexp_e1},
        {"qexp_W1_m4_T3", qexp_w1},
    };
}

static fs::path oracle_dir(const std::string& flag)
{
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("BST_ORACLE_DIR")) return env;
    return "oracles";
}

static int cmd_oracle(const std::string& mode, const std::string& dir_flag)
{
    fs::path dir = oracle_dir(dir_flag);
    if (mode == "check" && !fs::is_directory(dir)) {
        std::cerr << "{\"error\": \"oracle directory missing\"}\n";
        return 2;
    }
    std::vector<std::string> divergent;
    for (const oracle_entry& e : oracle_table()) {
        std::string fresh = canonical_dump(e.make());
        fs::path file = dir / (e.name + ".json");
        std::string stored;
        if (fs::exists(file)) {
            std::ifstream in(file);
            stored.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        if (mode == "rebuild") {
            if (!stored.empty() && stored != fresh) {
                divergent.push_back(e.name);
                continue; /* refuse to overwrite a changed golden value */
            }
            fs::create_directories(dir);
            std::ofstream out(file);
            out << fresh;
        } else {
            if (stored != fresh) divergent.push_back(e.name);
        }
    }
    ordered_json j;
    j["command"] = "oracle " + mode;
    j["entries"] = (long)oracle_table().size();
    ordered_json dv = ordered_json::array();
    for (const std::string& n : divergent) dv.push_back(n);
    j["divergent"] = dv;
    std::cout << canonical_dump(j);
    return divergent.empty() ? 0 : 1;
}

/* ---- compute ------------------------------------------------------------ */

static int cmd_compute(const std::string& what, long d, const std::string& s_str,
                       const std::string& t_str, long k, long cond)
{
    std::vector<long> T = parse_longs(t_str), S = parse_longs(s_str);
    if (what == "classgroup") {
        std::cout << canonical_dump(classgroup_json(d));
    } else if (what == "rayclass") {
        std::cout << canonical_dump(rayclass_json(d, T));
    } else if (what == "theta") {
        std::cout << canonical_dump(theta_json(d, S, T));
    } else if (what == "ks") {
        std::cout << canonical_dump(ks_json(d, T));
    } else if (what == "qexp") {
        dirichlet_character psi = cond == 1 ? trivial_character(1) : quadratic_character(-cond);
        std::cout << canonical_dump(qexp_json(eisenstein_qexp(k, psi, S), 200));
    } else {
        throw CLI::ValidationError("compute", "unknown object " + what);
    }
    return 0;
}

int main(int argc, char** argv)
{
    CLI::App app{"exact verification toolkit for smoothed class group conjectures"};
    app.set_config("--config");
    app.require_subcommand(1);

    verify_opts vo;
    CLI::App* ver = app.add_subcommand("verify", "run a theorem check over a case family");
    ver->add_option("theorem", vo.theorem, "brumer-stark | cnf | kurihara | bs-unit | selmer")
        ->required();
    ver->add_option("--d", vo.d, "fundamental discriminant < 0");
    ver->add_option("--d1", vo.d1, "first biquadratic discriminant");
    ver->add_option("--d2", vo.d2, "second biquadratic discriminant");
    ver->add_option("--disc-max", vo.disc_max, "sweep fundamental |D| up to this bound");
    ver->add_option("--T", vo.t_str, "smoothing primes, comma separated")->required();
    ver->add_option("--S", vo.s_str, "extra depletion primes, comma separated");
    ver->add_option("--p", vo.p, "prime for p-part checks");
    ver->add_option("--prime", vo.prime, "split prime for the unit construction");
    ver->add_option("--out", vo.out_dir, "directory for per-case report files");
    ver->add_option("--jobs", vo.jobs, "case-level parallelism degree");

    std::string c_what, c_s, c_t;
    long c_d = 0, c_k = 4, c_cond = 1;
    CLI::App* comp = app.add_subcommand("compute", "print one object as canonical JSON");
    comp->add_option("object", c_what, "theta | ks | classgroup | rayclass | qexp")->required();
    comp->add_option("--d", c_d, "fundamental discriminant < 0");
    comp->add_option("--S", c_s, "depletion primes");
    comp->add_option("--T", c_t, "smoothing primes");
    comp->add_option("--k", c_k, "weight (qexp)");
    comp->add_option("--cond", c_cond, "quadratic nebentypus conductor (qexp), 1 = trivial");

    std::string o_mode, o_dir;
    CLI::App* orc = app.add_subcommand("oracle", "golden-value management");
    orc->add_option("mode", o_mode, "rebuild | check")->required()
        ->check(CLI::IsMember({"rebuild", "check"}));
    orc->add_option("--dir", o_dir, "oracle directory (default: env BST_ORACLE_DIR or ./oracles)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (ver->parsed()) return cmd_verify(vo);
        if (comp->parsed()) return cmd_compute(c_what, c_d, c_s, c_t, c_k, c_cond);
        if (orc->parsed()) return cmd_oracle(o_mode, o_dir);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": \"internal: " << e.what() << "\"}\n";
        return 3;
    }
    return 2;
}
