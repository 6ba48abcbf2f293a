#include "qk/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qk/bosonization.hpp"
#include "qk/graded.hpp"
#include "qk/io.hpp"
#include "qk/preantipode.hpp"

namespace qk {

namespace {

struct Session {
  std::ostream& out;
  std::ostream& err;
  std::string format = "text";  // text | records
  std::optional<Field> field;
  std::map<std::string, Workspace> files;

  Workspace& load(const std::string& path) {
    auto it = files.find(path);
    if (it != files.end()) return it->second;
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    auto [jt, ok] = files.emplace(path, parse_workspace(ss.str(), field));
    return jt->second;
  }

  // "file.qk#name" or "file.qk" (unique object of the kind)
  std::pair<Workspace*, const Workspace::Entry*> resolve(const std::string& ref,
                                                         const std::string& kind) {
    auto hash = ref.find('#');
    std::string path = hash == std::string::npos ? ref : ref.substr(0, hash);
    Workspace& ws = load(path);
    if (hash != std::string::npos) {
      const auto& e = ws.get(ref.substr(hash + 1), kind);
      return {&ws, &e};
    }
    const Workspace::Entry* found = nullptr;
    for (const auto& e : ws.entries) {
      if (!kind.empty() && e.kind != kind) continue;
      if (found) throw ParseError("'" + ref + "' is ambiguous; use " + path + "#<name>");
      found = &e;
    }
    if (!found) throw ParseError("'" + ref + "' contains no " + kind + " object");
    return {&ws, found};
  }

  void print(const Report& rep) {
    if (format == "records") {
      for (const auto& r : rep.records) {
        std::string w = r.witness;
        std::string esc;
        for (char c : w) {
          if (c == '"' || c == '\\') esc += '\\';
          esc += c;
        }
        out << "record subject=\"" << rep.subject << "\" check=\"" << r.name << "\" status="
            << (r.pass ? "pass" : "fail") << " witness=\"" << esc << "\"\n";
      }
      int fails = 0;
      for (const auto& r : rep.records) fails += r.pass ? 0 : 1;
      out << "summary subject=\"" << rep.subject << "\" status=" << (rep.ok() ? "pass" : "fail")
          << " checks=" << rep.records.size() << " failures=" << fails << "\n";
    } else {
      out << rep.text();
    }
  }

  void write_out(const std::string& path, const Workspace& ws) {
    std::ofstream o(path);
    if (!o) throw ParseError("cannot write '" + path + "'");
    o << serialize_workspace(ws);
  }
};

Workspace::Entry make_dqb_entry(const std::string& name, DualQuasiBialgebra H) {
  Workspace::Entry e;
  e.kind = "dqb";
  e.name = name;
  e.dqb = std::make_shared<DualQuasiBialgebra>(std::move(H));
  return e;
}

Workspace::Entry make_map_entry(const std::string& name, const std::string& src,
                                const std::string& dst, Matrix m) {
  Workspace::Entry e;
  e.kind = "map";
  e.name = name;
  e.map = std::make_shared<MapObject>(MapObject{src, dst, std::move(m)});
  return e;
}

Workspace::Entry make_braided_entry(const std::string& name, const std::string& over,
                                    BraidedBialgebra R) {
  Workspace::Entry e;
  e.kind = "braided";
  e.name = name;
  e.over = over;
  e.braided = std::make_shared<BraidedBialgebra>(std::move(R));
  return e;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Session s{out, err, "text", std::nullopt, {}};
  CLI::App app{"exact workbench for finite-dimensional dual quasi-bialgebras"};
  app.require_subcommand(1);
  std::string field_opt;
  app.add_option("--field", field_opt, "ground field (Q or F<p>) for files without a field line");
  app.add_option("--format", s.format, "report format")
      ->check(CLI::IsMember({"text", "records"}));

  std::string ref, ref2, ref3, ref4, kind_arg, out_path, pre_ref, group_ref, grouplikes;
  bool solve_flag = false;
  std::vector<std::string> layer_opts;

  auto* c_check = app.add_subcommand("check", "run the axiom suite of one object");
  c_check->add_option("kind", kind_arg, "object kind")
      ->required()
      ->check(CLI::IsMember({"coalgebra", "dqb", "comodule", "yd", "trimodule", "braided", "crossed"}));
  c_check->add_option("ref", ref, "file.qk[#name]")->required();

  auto* c_solve = app.add_subcommand("solve", "solve for a preantipode by linear algebra");
  std::string what;
  c_solve->add_option("what", what, "what to solve")->required()->check(CLI::IsMember({"preantipode"}));
  c_solve->add_option("ref", ref, "file.qk[#name] (dqb)")->required();
  c_solve->add_option("--out", out_path, "write the algebra plus the solved map");

  auto* c_bos = app.add_subcommand("bosonize", "build R#H from H and a braided bialgebra R");
  c_bos->add_option("H", ref, "file.qk[#name] (dqb)")->required();
  c_bos->add_option("R", ref2, "file.qk[#name] (braided)")->required();
  c_bos->add_option("--out", out_path, "write the bosonization");

  auto* c_split = app.add_subcommand("split", "split a dual quasi-bialgebra with projection");
  c_split->add_option("A", ref, "file.qk[#name] (dqb)")->required();
  c_split->add_option("H", ref2, "file.qk[#name] (dqb)")->required();
  c_split->add_option("sigma", ref3, "file.qk[#name] (map H->A)")->required();
  c_split->add_option("pi", ref4, "file.qk[#name] (map A->H)")->required();
  c_split->add_option("--preantipode", pre_ref, "file.qk[#name] (map H->H)");
  c_split->add_flag("--solve", solve_flag, "solve for the preantipode of H");
  c_split->add_option("--out", out_path, "write the recovered data");

  auto* c_gr = app.add_subcommand("gr", "associated graded dual quasi-bialgebra");
  c_gr->add_option("A", ref, "file.qk[#name] (dqb)")->required();
  c_gr->add_option("--grouplikes", grouplikes, "comma-separated basis labels spanning the coradical");
  c_gr->add_option("--layer", layer_opts,
                   "declared filtration layer (comma-separated labels; repeatable, ascending)");
  c_gr->add_option("--out", out_path, "write gr A with its projection data");

  auto* c_from = app.add_subcommand("from-group", "group algebra with cocycle reassociator");
  c_from->add_option("group", ref, "file.qk[#name] (group)")->required();
  c_from->add_option("--out", out_path, "write the dual quasi-bialgebra");

  auto* c_conv = app.add_subcommand("convert", "move between YD modules and crossed modules");
  std::string direction;
  c_conv->add_option("direction", direction, "yd2crossed | crossed2yd")
      ->required()
      ->check(CLI::IsMember({"yd2crossed", "crossed2yd"}));
  c_conv->add_option("ref", ref, "file.qk[#name]")->required();
  c_conv->add_option("--group", group_ref, "group for yd2crossed");
  c_conv->add_option("--out", out_path, "write the converted module");

  auto* c_suite = app.add_subcommand("suite", "every applicable invariant of every object");
  c_suite->add_option("file", ref, "file.qk")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream dummy;
    int code = app.exit(e, dummy, err);
    out << dummy.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (!field_opt.empty()) s.field = Field::parse(field_opt);

    if (*c_check) {
      auto [ws, e] = s.resolve(ref, kind_arg);
      Report rep = validate_entry(*ws, *e);
      s.print(rep);
      return rep.ok() ? 0 : 1;
    }
    if (*c_solve) {
      auto [ws, e] = s.resolve(ref, "dqb");
      auto sol = solve_preantipode(*e->dqb);
      if (!sol) {
        s.out << "no preantipode (system inconsistent)\n";
        return 1;
      }
      Report rep;
      rep.subject = "preantipode of " + e->name;
      rep.merge(check_preantipode(*e->dqb, sol->S), "");
      rep.merge(check_derived_identities(*e->dqb, sol->S), "");
      s.print(rep);
      if (s.format == "records") {
        s.out << "record subject=\"preantipode of " << e->name
              << "\" check=\"solution space dimension\" status=pass witness=\""
              << sol->solution_space_dim << "\"\n";
      } else {
        s.out << "solution space dimension " << sol->solution_space_dim << "\n";
        for (int i = 0; i < sol->S.rows(); ++i)
          for (int j = 0; j < sol->S.cols(); ++j)
            if (!sol->S.at(i, j).is_zero())
              s.out << "S " << i << " " << j << " = " << sol->S.at(i, j).str() << "\n";
      }
      if (!out_path.empty()) {
        Workspace o;
        o.field = ws->field;
        o.entries.push_back(*e);
        o.entries.push_back(make_map_entry("S", e->name, e->name, sol->S));
        s.write_out(out_path, o);
      }
      return rep.ok() ? 0 : 1;
    }
    if (*c_bos) {
      auto [wsH, eH] = s.resolve(ref, "dqb");
      auto [wsR, eR] = s.resolve(ref2, "braided");
      if (eR->over != eH->name || eR->braided->carrier.over() != eH->dqb.get())
        throw ParseError("R is not declared over this H");
      Bosonization b = bosonize(*eH->dqb, *eR->braided);
      Report rep = check_dqb(b.B);
      rep.subject = "bosonization";
      ProjectionData p{&b.B, eH->dqb.get(), b.sigma, b.pi};
      rep.merge(check_projection(p), "projection");
      s.print(rep);
      if (!out_path.empty()) {
        Workspace o;
        o.field = wsH->field;
        Workspace::Entry be = make_dqb_entry("B", b.B);
        be.has_provenance = true;
        be.provenance = {content_hash(serialize_entry(*wsH, *eH)),
                         content_hash(serialize_entry(*wsR, *eR))};
        o.entries.push_back(std::move(be));
        s.write_out(out_path, o);
      }
      return rep.ok() ? 0 : 1;
    }
    if (*c_split) {
      auto [wsA, eA] = s.resolve(ref, "dqb");
      auto [wsH, eH] = s.resolve(ref2, "dqb");
      auto [wsS, eS] = s.resolve(ref3, "map");
      auto [wsP, eP] = s.resolve(ref4, "map");
      ProjectionData p{eA->dqb.get(), eH->dqb.get(), eS->map->matrix, eP->map->matrix};
      Report rep = check_projection(p);
      if (eA->has_provenance) {
        // A was written by `bosonize`; its provenance pins the base it came from
        std::string hhash = content_hash(serialize_entry(*wsH, *eH));
        if (eA->provenance.first == hhash)
          rep.pass("provenance: A is a recorded bosonization over this H");
        else
          rep.fail("provenance: A is a recorded bosonization over this H",
                   "recorded base hash " + eA->provenance.first + ", given " + hhash);
      }
      Matrix S(p.H->field(), 0, 0);
      if (!pre_ref.empty()) {
        auto [wsPre, ePre] = s.resolve(pre_ref, "map");
        S = ePre->map->matrix;
        if (!check_preantipode(*p.H, S).ok()) {
          rep.fail("preantipode", "supplied map is not a preantipode");
          s.print(rep);
          return 1;
        }
      } else {
        auto sol = solve_preantipode(*p.H);
        if (!sol) {
          rep.fail("preantipode", "no preantipode (system inconsistent)");
          s.print(rep);
          return 1;
        }
        S = sol->S;
      }
      SplitResult sp = split(p, S);
      rep.merge(check_braided_bialgebra(sp.R), "R");
      Bosonization b = bosonize(*p.H, sp.R);
      DQBMorphism iso{&b.B, p.A, sp.iso};
      rep.merge(check_dqb_morphism(iso), "eps_A");
      if ((sp.iso * sp.iso_inv).is_identity() && (sp.iso_inv * sp.iso).is_identity())
        rep.pass("eps_A invertible");
      else
        rep.fail("eps_A invertible", "composites differ from identity");
      s.print(rep);
      if (!out_path.empty()) {
        Workspace o;
        o.field = wsA->field;
        o.entries.push_back(*eH);
        o.entries.push_back(make_braided_entry("R", eH->name, sp.R));
        o.entries.push_back(*eA);
        Workspace::Entry be = make_dqb_entry("B", b.B);
        o.entries.push_back(std::move(be));
        o.entries.push_back(make_map_entry("epsA", "B", eA->name, sp.iso));
        o.entries.push_back(make_map_entry("epsAinv", eA->name, "B", sp.iso_inv));
        s.write_out(out_path, o);
      }
      return rep.ok() ? 0 : 1;
    }
    if (*c_gr) {
      auto [ws, eA] = s.resolve(ref, "dqb");
      const auto& A = *eA->dqb;
      Report rep;
      rep.subject = "gr " + eA->name;
      Filtration filt;
      bool certified = false;
      if (!layer_opts.empty()) {
        std::vector<Vec> prev;
        for (const auto& layer : layer_opts) {
          std::istringstream ls(layer);
          std::string lab;
          while (std::getline(ls, lab, ',')) {
            auto it = std::find(A.co.labels.begin(), A.co.labels.end(), lab);
            if (it == A.co.labels.end()) throw ParseError("unknown basis label '" + lab + "'");
            Vec v(A.dim(), Scalar::zero(A.field()));
            v[it - A.co.labels.begin()] = Scalar::one(A.field());
            prev.push_back(v);
          }
          filt.layers.push_back(Subspace::span(A.field(), A.dim(), prev));
        }
        Report fr = check_filtration(A.co, filt);
        rep.merge(fr, "declared filtration");
        rep.pass("coradical: declared, not certified");
        if (!fr.ok()) {
          s.print(rep);
          return 1;
        }
      } else {
        std::vector<Vec> gl;
        if (grouplikes.empty()) {
          gl = find_basis_grouplikes(A.co);
        } else {
          std::istringstream ls(grouplikes);
          std::string lab;
          while (std::getline(ls, lab, ',')) {
            auto it = std::find(A.co.labels.begin(), A.co.labels.end(), lab);
            if (it == A.co.labels.end()) throw ParseError("unknown basis label '" + lab + "'");
            Vec v(A.dim(), Scalar::zero(A.field()));
            v[it - A.co.labels.begin()] = Scalar::one(A.field());
            gl.push_back(v);
          }
        }
        CoradicalCertificate cert = certify_coradical(A, gl);
        if (!cert.certified) {
          rep.fail("coradical certification", cert.note);
          s.print(rep);
          return 1;
        }
        rep.pass("coradical certification: " + cert.note);
        filt = cert.filtration;
        certified = true;
      }
      GradedDQBResult G = gr_dqb(A, filt, certified);
      rep.merge(check_dqb(G.gr), "gr");
      GrProjection pr = gr_projection(A, G);
      ProjectionData p{&G.gr, &pr.H0, pr.sigma, pr.pi};
      rep.merge(check_projection(p), "projection onto layer 0");
      auto sol = solve_preantipode(pr.H0);
      if (sol) {
        SplitResult sp = split(p, sol->S);
        rep.merge(check_braided_bialgebra(sp.R), "diagram R");
        Bosonization b = bosonize(pr.H0, sp.R);
        DQBMorphism iso{&b.B, &G.gr, sp.iso};
        rep.merge(check_dqb_morphism(iso), "gr A = R#H0");
        if (!out_path.empty()) {
          Workspace o;
          o.field = ws->field;
          o.entries.push_back(make_dqb_entry("H0", pr.H0));
          o.entries.push_back(make_dqb_entry("grA", G.gr));
          o.entries.push_back(make_map_entry("sigma", "H0", "grA", pr.sigma));
          o.entries.push_back(make_map_entry("pi", "grA", "H0", pr.pi));
          o.entries.push_back(make_braided_entry("R", "H0", sp.R));
          s.write_out(out_path, o);
        }
      } else {
        rep.fail("diagram", "layer 0 has no preantipode; splitting not available");
      }
      s.print(rep);
      return rep.ok() ? 0 : 1;
    }
    if (*c_from) {
      auto [ws, eG] = s.resolve(ref, "group");
      DualQuasiBialgebra H = from_group_cocycle(*eG->group);
      Report rep = check_dqb(H);
      rep.subject = "group cocycle algebra " + eG->name;
      s.print(rep);
      if (!out_path.empty()) {
        Workspace o;
        o.field = ws->field;
        o.entries.push_back(make_dqb_entry(eG->name + "_alg", H));
        s.write_out(out_path, o);
      }
      return rep.ok() ? 0 : 1;
    }
    if (*c_conv) {
      if (direction == "yd2crossed") {
        auto [ws, eV] = s.resolve(ref, "yd");
        if (group_ref.empty()) throw ParseError("yd2crossed needs --group");
        auto [wsG, eG] = s.resolve(group_ref, "group");
        CrossedGModule V = yd_to_crossed(*eV->yd, eG->group.get());
        Report rep = crossed_check(V);
        rep.subject = "crossed module from " + eV->name;
        s.print(rep);
        if (!out_path.empty()) {
          Workspace o;
          o.field = ws->field;
          o.entries.push_back(*eG);
          Workspace::Entry e;
          e.kind = "crossed";
          e.name = eV->name + "_crossed";
          e.over = eG->name;
          e.crossed = std::make_shared<CrossedGModule>(std::move(V));
          o.entries.push_back(std::move(e));
          s.write_out(out_path, o);
        }
        return rep.ok() ? 0 : 1;
      }
      auto [ws, eV] = s.resolve(ref, "crossed");
      // rebuild the cocycle group algebra as the base
      Workspace o;
      o.field = ws->field;
      const Workspace::Entry& ge = ws->get(eV->over, "group");
      o.entries.push_back(ge);
      DualQuasiBialgebra H = from_group_cocycle(*ge.group);
      o.entries.push_back(make_dqb_entry(ge.name + "_alg", std::move(H)));
      YDModule V = crossed_to_yd(*eV->crossed, o.entries.back().dqb.get());
      Report rep = check_yd(V);
      rep.subject = "YD module from " + eV->name;
      s.print(rep);
      if (!out_path.empty()) {
        Workspace::Entry e;
        e.kind = "yd";
        e.name = eV->name + "_yd";
        e.over = ge.name + "_alg";
        e.yd = std::make_shared<YDModule>(std::move(V));
        o.entries.push_back(std::move(e));
        s.write_out(out_path, o);
      }
      return rep.ok() ? 0 : 1;
    }
    if (*c_suite) {
      Workspace& ws = s.load(ref);
      bool all_ok = true;
      for (const auto& e : ws.entries) {
        Report rep = validate_entry(ws, e);
        s.print(rep);
        all_ok = all_ok && rep.ok();
      }
      return all_ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qk
