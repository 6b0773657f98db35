// latfact: command line front end for the lattice-monoid factorization
// library. One subcommand per library operation; results are emitted as a
// JSON document {"command", "input_digest", "payload"[, "certificate"]} or,
// with --format table, as a plain-text rendering of the same data.
//
// Exit status: 0 success, 2 input/precondition error, 3 resource bound hit.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latfact/constructions.hpp"
#include "latfact/elasticity.hpp"
#include "latfact/errors.hpp"
#include "latfact/factorization.hpp"
#include "latfact/genlength.hpp"
#include "latfact/geometry.hpp"
#include "latfact/monoid.hpp"

using namespace latfact;

namespace {

// ------------------------------------------------------------------ options

struct Options {
    std::string spec_path;
    std::string spec2_path;
    std::string element;
    std::string set;
    std::string ray1, ray2;
    std::string bound = "10000";
    std::string window = "12";
    std::string ratio = "10";
    std::string count = "6";
    std::string dim = "3";
    std::string profile = "two-limit";
    std::string profile2 = "one-limit";
    std::string ell = "1";
    std::string cap = "2";
    std::string out_path;
    std::string format = "json";
    unsigned parallel = 1;

    // raw bytes of the loaded spec files, kept for the input digest
    std::string spec_raw;
    std::string spec2_raw;
};

// ------------------------------------------------------------------ helpers

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ContractError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json_text(const std::string& text)
{
    return Json::parse(text);   // parse_error carries the byte position
}

MonoidSpec load_spec(const std::string& path, std::string& raw_out)
{
    if (path.empty())
        throw ContractError("this command requires --spec");
    raw_out = read_file(path);
    return parse_spec(parse_json_text(raw_out));
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

IntVec parse_vec_arg(const std::string& s, std::size_t dim, const char* what)
{
    if (s.empty())
        throw ContractError(std::string("this command requires --") + what);
    IntVec v;
    for (const std::string& p : split_commas(s))
        v.c.push_back(parse_int(p));
    if (dim != 0 && v.c.size() != dim)
        throw ContractError(std::string("--") + what + " has " +
                            std::to_string(v.c.size()) + " coordinates, spec has dimension " +
                            std::to_string(dim));
    return v;
}

std::vector<Int> parse_int_list(const std::string& s, const char* what)
{
    if (s.empty())
        throw ContractError(std::string("this command requires --") + what);
    std::vector<Int> out;
    for (const std::string& p : split_commas(s))
        out.push_back(parse_int(p));
    return out;
}

std::size_t parse_size(const std::string& s, const char* what)
{
    Int v = parse_int(s);
    if (v < 0 || v > 1000000)
        throw ContractError(std::string("--") + what + " out of range: " + s);
    return static_cast<std::size_t>(v.convert_to<long long>());
}

BuildProfile parse_profile(const std::string& name, const std::string& ell,
                           const std::string& cap)
{
    BuildProfile p;
    if (name == "two-limit")
        p.two_limit = true;
    else if (name == "one-limit")
        p.two_limit = false;
    else
        throw ContractError("--profile must be two-limit or one-limit, got '" + name + "'");
    p.ell = parse_rat(ell);
    p.cap = parse_rat(cap);
    return p;
}

// Atom list a command operates on: a finite generator list is taken as given
// (deduplicated, canonical order); a family is truncated at the norm bound.
AtomList working_atoms(const MonoidSpec& spec, const Int& bound)
{
    return truncate_atoms(spec, bound);
}

// ------------------------------------------------------------------- digest

std::uint64_t fnv1a64(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string input_digest(const std::string& command, const Options& opt)
{
    std::string s = command;
    s += '\n';
    s += opt.spec_raw;
    s += '\n';
    s += opt.spec2_raw;
    s += '\n';
    s += "element=" + opt.element;
    s += ";set=" + opt.set;
    s += ";ray1=" + opt.ray1;
    s += ";ray2=" + opt.ray2;
    s += ";bound=" + opt.bound;
    s += ";window=" + opt.window;
    s += ";ratio=" + opt.ratio;
    s += ";count=" + opt.count;
    s += ";dim=" + opt.dim;
    s += ";profile=" + opt.profile;
    s += ";profile2=" + opt.profile2;
    s += ";ell=" + opt.ell;
    s += ";cap=" + opt.cap;
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return buf;
}

// ----------------------------------------------------------- serialization

Json rat_json(const Rat& r) { return rat_string(r); }

Json int_list_json(const std::vector<Int>& xs)
{
    Json a = Json::array();
    for (const Int& x : xs)
        a.push_back(int_json(x));
    return a;
}

Json vec_list_json(const std::vector<IntVec>& vs)
{
    Json a = Json::array();
    for (const IntVec& v : vs)
        a.push_back(vec_json(v));
    return a;
}

Json profile_json(const LimitSlopeProfile& p)
{
    Json limits = Json::array();
    for (const auto& e : p.limits) {
        Json ent;
        ent["slope"] = slope_string(e.slope);
        ent["direction"] = vec_json(e.direction);
        ent["atoms_below"] = e.atoms_below;
        ent["atoms_above"] = e.atoms_above;
        ent["weights_finite"] = e.weights_finite;
        limits.push_back(ent);
    }
    Json j;
    j["limits"] = limits;
    return j;
}

Json invariants_json(const IsoInvariants& inv)
{
    Json j;
    j["rank"] = inv.rank;
    j["finitely_many_atoms"] = inv.finitely_many_atoms;
    j["atom_count"] = inv.atom_count;
    if (inv.limit_slope_count)
        j["limit_slope_count"] = *inv.limit_slope_count;
    if (inv.extreme_ray_atoms) {
        Json a = Json::array();
        for (std::size_t n : *inv.extreme_ray_atoms)
            a.push_back(n);
        j["extreme_ray_atoms"] = a;
    }
    return j;
}

const char* attained_name(Attained a)
{
    switch (a) {
    case Attained::Yes: return "yes";
    case Attained::No: return "no";
    default: return "unknown";
    }
}

// --------------------------------------------------------------- rendering

void render_table_value(std::ostream& os, const std::string& key, const Json& v,
                        int depth)
{
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it)
            render_table_value(os, it.key(), it.value(), depth + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << pad << key << ":\n";
        std::size_t i = 0;
        for (const Json& e : v)
            render_table_value(os, "[" + std::to_string(i++) + "]", e, depth + 1);
    } else {
        os << pad << key << ": " << v.dump() << "\n";
    }
}

void emit(const Json& doc, const Options& opt, long long wall_ms)
{
    std::ostringstream body;
    if (opt.format == "table") {
        body << "command: " << doc["command"].get<std::string>() << "\n";
        body << "input_digest: " << doc["input_digest"].get<std::string>() << "\n";
        for (auto it = doc["payload"].begin(); it != doc["payload"].end(); ++it)
            render_table_value(body, it.key(), it.value(), 0);
        if (doc.contains("certificate"))
            render_table_value(body, "certificate", doc["certificate"], 0);
        body << "wall_time_ms: " << wall_ms << "\n";
    } else {
        body << doc.dump(2) << "\n";
    }
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out)
            throw ContractError("cannot write file: " + opt.out_path);
        out << body.str();
    } else {
        std::cout << body.str();
    }
}

// ------------------------------------------------------------- subcommands

Json cmd_atoms(Options& opt)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    Int bound = parse_int(opt.bound);
    AtomList atoms = spec.kind == SpecKind::Finite ? atoms_of(spec.generators)
                                                   : truncate_atoms(spec, bound);
    Json payload;
    payload["dim"] = spec.dim;
    payload["atom_count"] = atoms.atoms.size();
    payload["atoms"] = vec_list_json(atoms.atoms);
    return payload;
}

Json cmd_factorize(Options& opt)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    Int bound = parse_int(opt.bound);
    AtomList atoms = working_atoms(spec, bound);
    IntVec x = parse_vec_arg(opt.element, spec.dim, "element");
    std::vector<Factorization> zs = factorizations(atoms, x, opt.parallel);
    Json payload;
    payload["element"] = vec_json(x);
    payload["atoms"] = vec_list_json(atoms.atoms);
    payload["count"] = zs.size();
    Json arr = Json::array();
    Json lens = Json::array();
    {
        LengthSet ls = length_set(atoms, x);
        for (const Int& v : ls.values)
            lens.push_back(int_json(v));
    }
    for (const Factorization& z : zs)
        arr.push_back(int_list_json(z.expo));
    payload["factorizations"] = arr;
    payload["lengths"] = lens;
    return payload;
}

Json cmd_lengths(Options& opt)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    Int bound = parse_int(opt.bound);
    AtomList atoms = working_atoms(spec, bound);
    IntVec x = parse_vec_arg(opt.element, spec.dim, "element");
    LengthSet ls = length_set(atoms, x);
    Json payload;
    payload["element"] = vec_json(x);
    payload["lengths"] = int_list_json(ls.values);
    if (!ls.values.empty()) {
        payload["min"] = int_json(ls.values.front());
        payload["max"] = int_json(ls.values.back());
        payload["elasticity"] = rat_json(Rat(ls.values.back(), ls.values.front()));
    }
    return payload;
}

Json cmd_elasticity(Options& opt)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    Int bound = parse_int(opt.bound);
    AtomList atoms = working_atoms(spec, bound);
    ElasticityResult r = elasticity_fg(atoms);
    Json payload;
    payload["value"] = rat_json(r.value);
    payload["attained"] = attained_name(r.attained);
    payload["atom_count"] = atoms.atoms.size();
    if (r.lp) {
        Json u = Json::array(), v = Json::array();
        for (const Rat& q : r.lp->u)
            u.push_back(rat_json(q));
        for (const Rat& q : r.lp->v)
            v.push_back(rat_json(q));
        payload["lp"] = Json{{"u", u}, {"v", v}};
    }
    return payload;
}

Json cmd_classify(Options& opt, Json& certificate)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    std::size_t window = parse_size(opt.window, "window");
    Rat target = parse_rat(opt.ratio);
    Int bound = parse_int(opt.bound);
    ElasticityResult r = classify_rank2(spec, window, target, bound);
    Json payload;
    payload["kind"] = r.kind == ElasticityKind::Infinite ? "infinite" : "rational";
    payload["case"] = r.case_id;
    if (r.kind == ElasticityKind::Rational) {
        payload["value"] = rat_json(r.value);
        payload["attained"] = attained_name(r.attained);
        if (!r.s_values.empty())
            payload["s_values"] = int_list_json(r.s_values);
    }
    if (r.profile)
        payload["profile"] = profile_json(*r.profile);
    if (r.witness) {
        payload["certificate_ratio"] = rat_json(r.witness->ratio);
        certificate = certificate_json(*r.witness);
    }
    return payload;
}

Json cmd_certify(Options& opt, Json& certificate)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    Rat target = parse_rat(opt.ratio);
    Int bound = parse_int(opt.bound);
    RatioWitness w = unbounded_certificate(spec, target, bound);
    Json payload;
    payload["target"] = rat_json(target);
    payload["ratio"] = rat_json(w.ratio);
    certificate = certificate_json(w);
    return payload;
}

Json cmd_polyhedral(Options& opt, Json& certificate)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    Rat target = parse_rat(opt.ratio);
    if (rat_den(target) != 1 || rat_num(target) < 1)
        throw ContractError("--ratio must be a positive integer N for polyhedral-certify");
    Int bound = parse_int(opt.bound);
    RatioWitness w = polyhedral_certificate(spec, rat_num(target), bound);
    Json payload;
    payload["n"] = int_json(rat_num(target));
    payload["ratio"] = rat_json(w.ratio);
    certificate = certificate_json(w);
    return payload;
}

std::vector<Int> one_dim_generators(const MonoidSpec& spec)
{
    if (spec.kind != SpecKind::Finite || spec.dim != 1)
        throw ContractError("this command needs a finite spec of dimension 1");
    std::vector<Int> gens;
    for (const IntVec& g : spec.generators)
        gens.push_back(g.c.front());
    return gens;
}

Json cmd_gen_lengths(Options& opt)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    std::vector<Int> gens = one_dim_generators(spec);
    IntVec x = parse_vec_arg(opt.element, 1, "element");
    GenLengthSet ls = generalized_length_set(gens, x.c.front());
    Json payload;
    payload["element"] = int_json(x.c.front());
    payload["values"] = int_list_json(ls.values);
    return payload;
}

Json cmd_scan(Options& opt)
{
    MonoidSpec spec = load_spec(opt.spec_path, opt.spec_raw);
    std::vector<Int> gens = one_dim_generators(spec);
    Int x_max = parse_int(opt.bound);
    GenScanResult r = generalized_elasticity_scan(gens, x_max);
    Json payload;
    payload["x_max"] = int_json(x_max);
    payload["limit"] = rat_json(r.limit);
    payload["max_observed"] = rat_json(r.max_observed);
    payload["bound_certified"] = r.bound_certified;
    payload["affine_threshold"] = int_json(r.affine_threshold);
    payload["tail_window_lo"] = int_json(r.tail_window_lo);
    payload["tail_window_avg_gap"] = rat_json(r.tail_window_avg_gap);
    Json entries = Json::array();
    for (const GenScanEntry& e : r.entries)
        entries.push_back(Json{{"x", int_json(e.x)}, {"rho", rat_json(e.rho)}});
    payload["entries"] = entries;
    return payload;
}

Json cmd_hilbert(Options& opt)
{
    IntVec r1 = parse_vec_arg(opt.ray1, 2, "ray1");
    IntVec r2 = parse_vec_arg(opt.ray2, 2, "ray2");
    std::vector<IntVec> basis = hilbert_basis_2d(r1, r2);
    Json payload;
    payload["ray1"] = vec_json(r1);
    payload["ray2"] = vec_json(r2);
    payload["count"] = basis.size();
    payload["basis"] = vec_list_json(basis);
    return payload;
}

Json cmd_construct(Options& opt)
{
    std::size_t m = parse_size(opt.count, "count");
    BuildProfile profile = parse_profile(opt.profile, opt.ell, opt.cap);
    FullSystemBuild build = build_full_system(m, profile);
    return manifest_json(build);
}

Json cmd_realize(Options& opt)
{
    std::vector<Int> S = parse_int_list(opt.set, "set");
    Realization r = realize_length_set(S);
    Json payload;
    payload["set"] = int_list_json(S);
    payload["generators"] = int_list_json(r.generators);
    payload["element"] = int_json(r.element);
    return payload;
}

Json cmd_lift(Options& opt)
{
    std::size_t m = parse_size(opt.count, "count");
    std::size_t d = parse_size(opt.dim, "dim");
    BuildProfile profile = parse_profile(opt.profile, opt.ell, opt.cap);
    FullSystemBuild build = build_full_system(m, profile);
    MonoidSpec lifted = lift_rank(build, d);
    Json payload;
    payload["dim"] = d;
    payload["spec"] = spec_to_json(lifted);
    return payload;
}

MonoidSpec spec_or_profile(Options& opt, const std::string& path,
                           const std::string& profile_name, std::string& raw_out)
{
    if (!path.empty())
        return load_spec(path, raw_out);
    return direction_family(parse_profile(profile_name, opt.ell, opt.cap));
}

Json cmd_primary(Options& opt)
{
    MonoidSpec spec = spec_or_profile(opt, opt.spec_path, opt.profile, opt.spec_raw);
    PrimaryReport rep = primary_report(spec);
    Json payload;
    payload["primary"] = rep.primary;
    payload["explanation"] = rep.explanation;
    return payload;
}

Json cmd_noniso(Options& opt)
{
    MonoidSpec a = spec_or_profile(opt, opt.spec_path, opt.profile, opt.spec_raw);
    MonoidSpec b = spec_or_profile(opt, opt.spec2_path, opt.profile2, opt.spec2_raw);
    NonisoReport rep = noniso_witness(a, b);
    Json payload;
    payload["distinguishable"] = rep.distinguishable;
    if (rep.distinguishable)
        payload["differing"] = rep.differing;
    payload["a"] = invariants_json(rep.a);
    payload["b"] = invariants_json(rep.b);
    return payload;
}

Json cmd_verify(Options& opt)
{
    if (opt.spec_path.empty())
        throw ContractError("verify requires --spec FILE (certificate, result document, or build manifest)");
    opt.spec_raw = read_file(opt.spec_path);
    Json j = parse_json_text(opt.spec_raw);
    Json payload;
    if (j.is_object() && j.contains("element") && j.contains("short") && j.contains("long")) {
        Rat ratio = verify_certificate(certificate_from_json(j));
        payload["verified"] = "certificate";
        payload["ok"] = true;
        payload["ratio"] = rat_json(ratio);
    } else if (j.is_object() && j.contains("command") && j.contains("payload")) {
        if (j.contains("certificate")) {
            Rat ratio = verify_certificate(certificate_from_json(j["certificate"]));
            payload["verified"] = "certificate";
            payload["ok"] = true;
            payload["ratio"] = rat_json(ratio);
        } else if (j["payload"].is_object() && j["payload"].contains("blocks") &&
                   j["payload"].contains("profile")) {
            FullSystemBuild build = build_from_manifest(j["payload"]);
            verify_build(build);
            payload["verified"] = "build";
            payload["ok"] = true;
            payload["blocks"] = build.blocks.size();
        } else {
            throw ContractError("result document carries no certificate to verify");
        }
    } else if (j.is_object() && j.contains("blocks") && j.contains("profile")) {
        FullSystemBuild build = build_from_manifest(j);
        verify_build(build);
        payload["verified"] = "build";
        payload["ok"] = true;
        payload["blocks"] = build.blocks.size();
    } else {
        throw ContractError("unrecognized document shape: expected a certificate, "
                            "a result document, or a build manifest");
    }
    return payload;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact factorization invariants of lattice-point monoids"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool wants_spec) {
        if (wants_spec)
            sub->add_option("--spec", opt.spec_path, "monoid spec file (JSON)");
        sub->add_option("--out", opt.out_path, "write the result document here");
        sub->add_option("--format", opt.format, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--parallel", opt.parallel, "worker thread count");
        return sub;
    };

    auto* c_atoms = add_common(app.add_subcommand("atoms", "reduce generators to atoms"), true);
    c_atoms->add_option("--bound", opt.bound, "squared-norm truncation for families");

    auto* c_fact = add_common(app.add_subcommand("factorize", "all factorizations of an element"), true);
    c_fact->add_option("--element", opt.element, "target element, e.g. \"12,8\"");
    c_fact->add_option("--bound", opt.bound, "squared-norm truncation for families");

    auto* c_len = add_common(app.add_subcommand("lengths", "set of lengths of an element"), true);
    c_len->add_option("--element", opt.element, "target element");
    c_len->add_option("--bound", opt.bound, "squared-norm truncation for families");

    auto* c_elas = add_common(app.add_subcommand("elasticity", "exact elasticity over the working atom list"), true);
    c_elas->add_option("--bound", opt.bound, "squared-norm truncation for families");

    auto* c_cls = add_common(app.add_subcommand("classify", "rational/infinite elasticity of a rank-2 family"), true);
    c_cls->add_option("--window", opt.window, "validation window (member count)");
    c_cls->add_option("--ratio", opt.ratio, "certificate target ratio P/Q");
    c_cls->add_option("--bound", opt.bound, "witness search index bound");

    auto* c_cert = add_common(app.add_subcommand("certify", "ratio witness above a target for an infinite-elasticity family"), true);
    c_cert->add_option("--ratio", opt.ratio, "target ratio P/Q");
    c_cert->add_option("--bound", opt.bound, "witness search index bound");

    auto* c_poly = add_common(app.add_subcommand("polyhedral-certify", "pointed-cone ratio witness, dimension 3 and up"), true);
    c_poly->add_option("--ratio", opt.ratio, "size parameter N (positive integer)");
    c_poly->add_option("--bound", opt.bound, "member search index bound");

    auto* c_gl = add_common(app.add_subcommand("gen-lengths", "generalized length set over integer generators"), true);
    c_gl->add_option("--element", opt.element, "target integer");

    auto* c_scan = add_common(app.add_subcommand("scan-gen-elasticity", "generalized elasticity scan up to a bound"), true);
    c_scan->add_option("--bound", opt.bound, "scan ceiling x_max");

    auto* c_hil = add_common(app.add_subcommand("hilbert", "Hilbert basis of a 2d rational cone"), false);
    c_hil->add_option("--ray1", opt.ray1, "first extreme ray, e.g. \"1,0\"");
    c_hil->add_option("--ray2", opt.ray2, "second extreme ray");

    auto* c_con = add_common(app.add_subcommand("construct", "full-system build with verified length sets"), false);
    c_con->add_option("--count", opt.count, "number of blocks m");
    c_con->add_option("--profile", opt.profile, "two-limit or one-limit");
    c_con->add_option("--ell", opt.ell, "lower limit slope");
    c_con->add_option("--cap", opt.cap, "upper limit slope (two-limit only)");

    auto* c_real = add_common(app.add_subcommand("realize", "realize a length set over a numerical monoid"), false);
    c_real->add_option("--set", opt.set, "target set, e.g. \"2,3\"");

    auto* c_lift = add_common(app.add_subcommand("lift", "embed a build into higher dimension"), false);
    c_lift->add_option("--count", opt.count, "number of blocks m");
    c_lift->add_option("--profile", opt.profile, "two-limit or one-limit");
    c_lift->add_option("--ell", opt.ell, "lower limit slope");
    c_lift->add_option("--cap", opt.cap, "upper limit slope (two-limit only)");
    c_lift->add_option("--dim", opt.dim, "target dimension");

    auto* c_pri = add_common(app.add_subcommand("primary", "primariness of a family or finite spec"), true);
    c_pri->add_option("--profile", opt.profile, "use a built-in direction family instead of --spec");
    c_pri->add_option("--ell", opt.ell, "lower limit slope");
    c_pri->add_option("--cap", opt.cap, "upper limit slope");

    auto* c_iso = add_common(app.add_subcommand("witness-noniso", "separating invariant for two specs"), true);
    c_iso->add_option("--spec2", opt.spec2_path, "second monoid spec file");
    c_iso->add_option("--profile", opt.profile, "first built-in direction family");
    c_iso->add_option("--profile2", opt.profile2, "second built-in direction family");
    c_iso->add_option("--ell", opt.ell, "lower limit slope");
    c_iso->add_option("--cap", opt.cap, "upper limit slope");

    add_common(app.add_subcommand("verify", "check a certificate, result document, or build manifest"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    auto started = std::chrono::steady_clock::now();

    try {
        Json payload;
        Json certificate;
        if (command == "atoms") payload = cmd_atoms(opt);
        else if (command == "factorize") payload = cmd_factorize(opt);
        else if (command == "lengths") payload = cmd_lengths(opt);
        else if (command == "elasticity") payload = cmd_elasticity(opt);
        else if (command == "classify") payload = cmd_classify(opt, certificate);
        else if (command == "certify") payload = cmd_certify(opt, certificate);
        else if (command == "polyhedral-certify") payload = cmd_polyhedral(opt, certificate);
        else if (command == "gen-lengths") payload = cmd_gen_lengths(opt);
        else if (command == "scan-gen-elasticity") payload = cmd_scan(opt);
        else if (command == "hilbert") payload = cmd_hilbert(opt);
        else if (command == "construct") payload = cmd_construct(opt);
        else if (command == "realize") payload = cmd_realize(opt);
        else if (command == "lift") payload = cmd_lift(opt);
        else if (command == "primary") payload = cmd_primary(opt);
        else if (command == "witness-noniso") payload = cmd_noniso(opt);
        else if (command == "verify") payload = cmd_verify(opt);

        Json doc;
        doc["command"] = command;
        doc["input_digest"] = input_digest(command, opt);
        doc["payload"] = payload;
        if (!certificate.is_null())
            doc["certificate"] = certificate;
        auto elapsed = std::chrono::steady_clock::now() - started;
        long long wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        emit(doc, opt, wall_ms);
        return 0;
    } catch (const Json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
