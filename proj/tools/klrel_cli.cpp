// Command-line front end: group health summary, orbit tables, residual
// verification sweeps over the relation catalog (optionally transported by
// random group elements), and an entry-exact table dump.
//
// Exit codes: 0 all checks pass, 1 numerical failure, 2 structural or count
// mismatch, 3 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "klrel/json_io.hpp"

namespace {

using namespace klrel;

constexpr int kExitPass = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitStructural = 2;
constexpr int kExitUsage = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

int element_order(const GroupTables& t, int e) {
    int order = 1;
    int cur = e;
    while (cur != t.identity) {
        cur = t.mul(cur, e);
        ++order;
    }
    return order;
}

int cmd_group_info(const std::string& out_path) {
    const GroupTables& t = group_tables();
    std::ostringstream os;
    bool ok = true;

    os << "|M| = " << t.order() << "\n";
    os << "|G_K| = " << t.gk_elements.size() << "\n";
    os << "|G_L| = " << t.gl_elements.size() << "\n";
    os << "cosets(G_K) = 32\n";
    os << "cosets(G_L) = 12\n";
    ok = ok && t.order() == 23040;
    ok = ok && t.gk_elements.size() == 720 && t.gl_elements.size() == 1920;

    // The label maps must actually use 32 and 12 distinct labels.
    std::set<int> k_seen(t.k_label.begin(), t.k_label.end());
    std::set<int> l_seen(t.l_label.begin(), t.l_label.end());
    ok = ok && k_seen.size() == 32 && l_seen.size() == 12;

    const bool w0_ok = t.w0 != t.identity && t.mul(t.w0, t.w0) == t.identity &&
                       [&t] {
                           for (int g : t.defining_gens)
                               if (t.mul(t.w0, g) != t.mul(g, t.w0)) return false;
                           return true;
                       }();
    os << "w0 non-identity central involution: " << (w0_ok ? "yes" : "NO") << "\n";
    ok = ok && w0_ok;

    // D6 diagram in generator order (1', 1, 2, 3, 4, 5): the fork 1'-2, 1-2
    // and the chain 2-3-4-5 carry order 3; all other pairs commute.
    const std::set<std::pair<int, int>> edges = {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    int pair_ok = 0;
    for (int i = 0; i < 6; ++i) {
        if (element_order(t, t.coxeter_gens[static_cast<std::size_t>(i)]) != 2) ok = false;
        for (int j = i + 1; j < 6; ++j) {
            const int expected = edges.count({i, j}) ? 3 : 2;
            const int prod = t.mul(t.coxeter_gens[static_cast<std::size_t>(i)],
                                   t.coxeter_gens[static_cast<std::size_t>(j)]);
            if (element_order(t, prod) == expected) ++pair_ok;
        }
    }
    os << "Coxeter pair relations verified: " << pair_ok << "/15\n";
    ok = ok && pair_ok == 15;

    write_output(out_path, os.str());
    return ok ? kExitPass : kExitStructural;
}

int cmd_orbits(const std::string& family, const std::string& format,
               const std::string& out_path) {
    const GroupTables& t = group_tables();
    const FamilyClassification fc = classify_family(t, family_from_name(family));

    struct Expected {
        std::size_t orbits;
        int total;
    };
    Expected expect{};
    switch (fc.family) {
    case TupleFamily::K3: expect = {5, 4960}; break;
    case TupleFamily::L3: expect = {2, 220}; break;
    case TupleFamily::KL2: expect = {4, 2112}; break;
    case TupleFamily::LK2: expect = {7, 5952}; break;
    case TupleFamily::T3: expect = {18, 13244}; break;
    }
    int size_sum = 0;
    for (const TupleOrbit& o : fc.orbits) size_sum += o.size;
    const bool ok = fc.orbits.size() == expect.orbits && fc.total == expect.total &&
                    size_sum == fc.total;

    if (format == "text") {
        std::ostringstream os;
        os << family_name(fc.family) << ": " << fc.orbits.size() << " orbits, "
           << fc.total << " tuples\n";
        for (const TupleOrbit& o : fc.orbits) {
            os << "  {";
            for (std::size_t i = 0; i < o.representative.size(); ++i)
                os << (i ? ", " : "") << label_string(o.representative[i]);
            os << "}  size " << o.size << "\n";
        }
        write_output(out_path, os.str());
    } else {
        write_output(out_path, to_stable_string(orbit_report_json(fc)));
    }
    return ok ? kExitPass : kExitStructural;
}

std::string verify_text_line(const FamilyVerification& fv) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-18s type %3d  points %3d  max_rel %.3e  tol %.1e  %s",
                  fv.family.c_str(), fv.type, fv.points_tested, fv.max_relative_residual,
                  fv.tolerance, fv.pass ? "PASS" : "FAIL");
    return buf;
}

int cmd_verify(const std::vector<std::string>& families, bool all, int transport,
               const VerifyOptions& opt, const std::string& format,
               const std::string& out_path) {
    const GroupTables& t = group_tables();
    const std::vector<Relation>& catalog = relation_catalog();

    std::vector<const Relation*> selected;
    if (all || (families.empty() && transport == 0))
        for (const Relation& r : catalog) selected.push_back(&r);
    for (const std::string& name : families) {
        const Relation* found = nullptr;
        for (const Relation& r : catalog)
            if (r.family == name) found = &r;
        if (!found) {
            std::cerr << "unknown relation family: " << name << "\n";
            return kExitUsage;
        }
        selected.push_back(found);
    }

    std::vector<FamilyVerification> reports;
    for (const Relation* r : selected) {
        check_relation_structure(t, *r);
        reports.push_back(verify_relation(t, *r, opt));
    }
    if (transport > 0) {
        const std::vector<FamilyVerification> moved =
            verify_transported(t, transport, opt);
        reports.insert(reports.end(), moved.begin(), moved.end());
    }

    bool all_pass = true;
    for (const FamilyVerification& fv : reports) all_pass = all_pass && fv.pass;

    if (format == "json") {
        write_output(out_path, to_stable_string(verification_sweep_json(reports, opt)));
    } else {
        std::ostringstream os;
        for (const FamilyVerification& fv : reports) os << verify_text_line(fv) << "\n";
        os << (all_pass ? "all relations pass" : "FAILURES present") << " ("
           << reports.size() << " report" << (reports.size() == 1 ? "" : "s") << ")\n";
        write_output(out_path, os.str());
    }
    return all_pass ? kExitPass : kExitNumerical;
}

int cmd_dump_tables(const std::string& out_path) {
    const GroupTables& t = group_tables();
    const Json j = tables_json(t);
    check_tables_json(j, t);
    write_output(out_path, to_stable_string(j));
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coxeter-group toolkit for the three-term relations of a pair of "
                 "Saalschutzian double sums"};
    app.require_subcommand(1);

    std::string info_out;
    CLI::App* sc_info = app.add_subcommand("group-info", "group and coset health summary");
    sc_info->add_option("--output", info_out, "write the report to this file");

    std::string orbit_family = "T3", orbit_format = "json", orbit_out;
    CLI::App* sc_orbits = app.add_subcommand("orbits", "orbit tables for a tuple family");
    sc_orbits->add_option("--family", orbit_family, "SK3, SL3, SKL2, SLK2, or T3")
        ->check(CLI::IsMember({"SK3", "SL3", "SKL2", "SLK2", "T3"}));
    sc_orbits->add_option("--format", orbit_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sc_orbits->add_option("--output", orbit_out, "write the report to this file");

    std::vector<std::string> verify_families;
    bool verify_all = false;
    int verify_transport = 0;
    VerifyOptions opt;
    std::string verify_format = "text", verify_out;
    CLI::App* sc_verify =
        app.add_subcommand("verify", "residual sweep over relation families");
    sc_verify->add_option("--family", verify_families, "relation family name (repeatable)");
    sc_verify->add_flag("--all", verify_all, "verify the whole catalog");
    sc_verify->add_option("--points", opt.points, "sample points per relation")
        ->check(CLI::Range(1, 1000000));
    sc_verify->add_option("--tolerance", opt.tolerance, "relative residual tolerance")
        ->check(CLI::PositiveNumber);
    sc_verify->add_option("--seed", opt.seed, "sampling seed");
    sc_verify
        ->add_option("--transport", verify_transport,
                     "also verify N randomly transported relations")
        ->check(CLI::NonNegativeNumber);
    sc_verify->add_option("--format", verify_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sc_verify->add_option("--output", verify_out, "write the report to this file");

    std::string dump_out;
    CLI::App* sc_dump =
        app.add_subcommand("dump-tables", "entry-exact JSON dump of the group tables");
    sc_dump->add_option("--output", dump_out, "write the dump to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (sc_info->parsed()) return cmd_group_info(info_out);
        if (sc_orbits->parsed()) return cmd_orbits(orbit_family, orbit_format, orbit_out);
        if (sc_verify->parsed())
            return cmd_verify(verify_families, verify_all, verify_transport, opt,
                              verify_format, verify_out);
        if (sc_dump->parsed()) return cmd_dump_tables(dump_out);
    } catch (const LabelingMismatch& e) {
        std::cerr << "structural mismatch: " << e.what() << "\n";
        return kExitStructural;
    } catch (const DomainError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructural;
    }
    return kExitUsage;
}
