#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbx/classical.hpp"
#include "cbx/error.hpp"
#include "cbx/monopole.hpp"
#include "cbx/monops.hpp"
#include "cbx/yangian.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json series_json(const cbx::Series& s)
{
    ordered_json arr = ordered_json::array();
    for (auto [e, c] : s.items()) arr.push_back({e, c});
    return arr;
}

ordered_json op_json(const cbx::DiffOp& d)
{
    ordered_json arr = ordered_json::array();
    const cbx::VarTable& vt = *d.table();
    for (const auto& [m, f] : d.terms()) {
        ordered_json shift = ordered_json::object();
        for (const auto& [slot, k] : m.exponents()) shift["u" + vt.name(slot).substr(1)] = k;
        arr.push_back({{"shift", shift}, {"coeff", f.str()}});
    }
    return arr;
}

ordered_json report_json(const cbx::VerificationReport& r)
{
    ordered_json j;
    j["relation"] = r.relation;
    j["vertices"] = r.vertices;
    j["status"] = r.verified ? "verified" : "failed";
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_terms"] = r.rhs_terms;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

void emit(const ordered_json& doc, const std::string& out_path, const std::string& format,
          const std::string& text_form)
{
    std::string payload = (format == "json") ? doc.dump(2) + "\n" : text_form;
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw cbx::SchemaError("cannot open output file '" + out_path + "'");
        out << payload;
    }
}

} // namespace

int run(int argc, char** argv)
{
    CLI::App app{"exact Coulomb-branch algebra toolkit"};
    app.require_subcommand(1);

    std::string theory_path, out_path, format = "text";
    app.add_option("--out", out_path, "write the report to a file")->capture_default_str();
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto add_theory = [&](CLI::App* cmd) {
        cmd->add_option("--theory", theory_path, "theory configuration file")->required();
    };

    int order = 12, box = 6;
    auto* hilbert = app.add_subcommand("hilbert", "monopole-formula Hilbert series");
    hilbert->fallthrough();
    add_theory(hilbert);
    hilbert->add_option("--order", order, "truncation order");
    hilbert->add_option("--box", box, "coweight entry bound");

    auto* twisted = app.add_subcommand("twisted", "twisted monopole formula of a folded quiver");
    twisted->fallthrough();
    add_theory(twisted);
    twisted->add_option("--order", order, "truncation order");
    twisted->add_option("--box", box, "coweight entry bound");

    std::string relations = "all";
    auto* gklo = app.add_subcommand("gklo-check", "verify shifted-Yangian relations of the GKLO images");
    gklo->fallthrough();
    add_theory(gklo);
    gklo->add_option("--relations", relations, "all|HH|HE|HF|EE|FF|EF|SerreE|SerreF");

    std::string gen = "E", fexpr = "1", vertex_label;
    int nsel = 1, rsel = 1;
    auto* opcmd = app.add_subcommand("op", "emit a monopole operator");
    opcmd->fallthrough();
    add_theory(opcmd);
    opcmd->add_option("--gen", gen, "E|F|jordanE|jordanF|quasiminuscule|xi|gkloA|gkloE|gkloF|gkloH");
    opcmd->add_option("--vertex", vertex_label, "vertex label");
    opcmd->add_option("--n", nsel, "coweight level n");
    opcmd->add_option("--r", rsel, "index r (xi map)");
    opcmd->add_option("--f", fexpr, "symmetric function in e1,e2,...");

    std::string case_name = "connected";
    int ca = 2, cl = 1;
    auto* classical = app.add_subcommand("classical-check", "hbar=0 layer checks");
    classical->fallthrough();
    classical->add_option("--case", case_name, "disconnected|connected|same-vertex|surface");
    classical->add_option("--a", ca, "symmetric power (surface case)");
    classical->add_option("--l", cl, "flavor count (surface case)");
    classical->add_option("--order", order, "truncation order (surface case)");

    auto* bracket = app.add_subcommand("bracket", "Poisson bracket table of the generators");
    bracket->fallthrough();
    add_theory(bracket);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (hilbert->parsed() || twisted->parsed()) {
            cbx::QuiverTheory q = cbx::parse_theory_file(theory_path);
            cbx::Series s = hilbert->parsed()
                                ? cbx::hilbert_series(q, order, box)
                                : cbx::twisted_hilbert_series(cbx::FoldedTheory::from_theory(q), order, box);
            ordered_json doc;
            doc["command"] = hilbert->parsed() ? "hilbert" : "twisted";
            doc["order"] = order;
            doc["box"] = box;
            if (twisted->parsed() && cbx::FoldedTheory::from_theory(q).experimental())
                doc["notes"] = {"experimental: cyclic unfolding"};
            doc["series"] = series_json(s);
            emit(doc, out_path, format, s.str() + "\n");
            return 0;
        }
        if (gklo->parsed()) {
            cbx::QuiverTheory q = cbx::parse_theory_file(theory_path);
            cbx::VarTable vt = q.make_table();
            std::vector<cbx::VerificationReport> reps =
                relations == "all"
                    ? cbx::check_all_relations(q, &vt)
                    : cbx::check_all_relations(q, &vt, cbx::relation_from_name(relations));
            bool all_ok = true;
            ordered_json arr = ordered_json::array();
            std::string text;
            for (const auto& r : reps) {
                all_ok = all_ok && r.verified;
                arr.push_back(report_json(r));
                text += r.text() + "\n";
            }
            ordered_json doc;
            doc["command"] = "gklo-check";
            doc["relations"] = arr;
            doc["all_verified"] = all_ok;
            emit(doc, out_path, format, text);
            return all_ok ? 0 : 1;
        }
        if (opcmd->parsed()) {
            cbx::QuiverTheory q = cbx::parse_theory_file(theory_path);
            cbx::VarTable vt = q.make_table();
            cbx::SymFunc f = cbx::SymFunc::parse(fexpr);
            int v = vertex_label.empty() ? 0 : q.vertex_index(vertex_label);
            cbx::DiffOp d(&vt);
            if (gen == "E")
                d = cbx::quiver_E(q, &vt, v, nsel, f);
            else if (gen == "F")
                d = cbx::quiver_F(q, &vt, v, nsel, f);
            else if (gen == "jordanE" || gen == "jordanF") {
                if (q.nvertices() != 1) throw cbx::SchemaError("jordan operators need a one-vertex theory");
                d = cbx::jordan_op(q.dim[0], q.flavor[0], &vt, nsel, f,
                                   gen == "jordanE" ? cbx::JordanKind::E : cbx::JordanKind::F);
            } else if (gen == "quasiminuscule") {
                if (!q.root_system) throw cbx::SchemaError("quasiminuscule needs root_system in the theory");
                cbx::RootDatum rd = cbx::RootDatum::simple(q.root_system->series, q.root_system->rank);
                cbx::VarTable rvt = cbx::VarTable::make({rd.ambient()}, 0);
                std::vector<cbx::MPoly> coords;
                for (int c = 0; c < rd.ambient(); ++c)
                    coords.push_back(cbx::MPoly::var(&rvt, rvt.gauge(0, c)));
                cbx::DiffOp qm = cbx::quasi_minuscule(rd, &rvt, f.expand(&rvt, coords));
                ordered_json doc;
                doc["command"] = "op";
                doc["gen"] = gen;
                doc["terms"] = op_json(qm);
                emit(doc, out_path, format, qm.str() + "\n");
                return 0;
            } else if (gen == "xi")
                d = cbx::xi_map(q, &vt, v, rsel - 1);
            else if (gen == "gkloA" || gen == "gkloE" || gen == "gkloF" || gen == "gkloH")
                d = cbx::gklo_image(q, &vt, cbx::gklo_gen_from_name(gen.substr(4)), v);
            else
                throw cbx::SchemaError("unknown generator '" + gen + "'");
            ordered_json doc;
            doc["command"] = "op";
            doc["gen"] = gen;
            doc["terms"] = op_json(d);
            emit(doc, out_path, format, d.str() + "\n");
            return 0;
        }
        if (classical->parsed()) {
            cbx::VerificationReport rep;
            if (case_name == "surface")
                rep = cbx::surface_sym_check(ca, cl, order);
            else
                rep = cbx::zastava_rank2_check(cbx::zastava_case_from_name(case_name));
            ordered_json doc;
            doc["command"] = "classical-check";
            doc["report"] = report_json(rep);
            emit(doc, out_path, format, rep.text() + "\n");
            return rep.verified ? 0 : 1;
        }
        if (bracket->parsed()) {
            cbx::QuiverTheory q = cbx::parse_theory_file(theory_path);
            cbx::VarTable vt = q.make_table();
            cbx::VerificationReport rep = cbx::poisson_table(q, &vt);
            ordered_json doc;
            doc["command"] = "bracket";
            doc["report"] = report_json(rep);
            emit(doc, out_path, format, rep.text() + "\n");
            return rep.verified ? 0 : 1;
        }
    } catch (const cbx::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cbx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int main(int argc, char** argv) { return run(argc, argv); }
