#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cohlab/attachments.hpp"
#include "cohlab/catalog.hpp"
#include "cohlab/document.hpp"
#include "cohlab/extension.hpp"
#include "cohlab/solver.hpp"

namespace cohlab::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(file);
  if (!f) throw IoError("cannot open " + file);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& file, std::ostream& out) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(file);
  if (!f) throw IoError("cannot write " + file);
  f << text;
}

std::pair<Polyhedron, std::optional<Labelling>> make_catalog(const std::string& name) {
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  int n = -1;
  if (colon != std::string::npos) {
    std::string tail = name.substr(colon + 1);
    try {
      std::size_t used = 0;
      n = std::stoi(tail, &used);
      if (used != tail.size() || n < 0) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      fail(Errc::InvalidN, "bad size in catalog name \"" + name + "\"");
    }
  }
  if (kind == "tetrahedron") return {tetrahedron().poly, std::nullopt};
  if (kind == "cuboid") return {cuboid(), std::nullopt};
  if (kind == "prism") {
    if (n < 0) fail(Errc::InvalidN, "prism needs a size, e.g. prism:4");
    return {prism(n), std::nullopt};
  }
  if (kind == "pyramid") {
    if (n < 0) fail(Errc::InvalidN, "pyramid needs a size, e.g. pyramid:4");
    auto [p, l] = pyramid(n);
    return {std::move(p), std::move(l)};
  }
  if (kind == "bipyramid") {
    if (n < 0) fail(Errc::InvalidN, "bipyramid needs a size, e.g. bipyramid:4");
    auto [p, l] = bipyramid(n);
    return {std::move(p), std::move(l)};
  }
  fail(Errc::SchemaError, "unknown catalog name \"" + name + "\"");
}

Labelling require_labels(const PolyhedronDocument& doc) {
  if (!doc.labels) fail(Errc::MissingLabel, "this command needs a labelled document");
  return *doc.labels;
}

const char* mode_name(AttachMode m) {
  switch (m) {
    case AttachMode::A1: return "a1";
    case AttachMode::A2: return "a2";
    case AttachMode::A3: return "a3";
    case AttachMode::A4: return "a4";
    case AttachMode::A5: return "a5";
  }
  return "?";
}

void report_spec(const AttachmentSpec& s, std::ostream& err) {
  err << "attached mode=" << mode_name(s.mode) << " face=" << s.face1;
  if (s.face2 >= 0) err << "," << s.face2;
  if (s.edge >= 0) err << " edge=" << s.edge;
  if (s.vertex >= 0) err << " vertex=" << s.vertex;
  if (s.d) err << " d=" << s.d->str();
  if (s.e) err << " e=" << s.e->str();
  if (s.f) err << " f=" << s.f->str();
  if (s.cyclic_shifts) err << " shifts=" << s.cyclic_shifts;
  err << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"coherent edge labellings of abstract polyhedra"};
  app.require_subcommand(1);

  std::string catalog_name, file, outfile, engine = "backtrack", mode;
  std::vector<int> face_opts;
  int edge_opt = -1, vertex_opt = -1, fix_min_edge = -1;
  bool vertex_flag = false, all_flag = false;

  auto* cmd_build = app.add_subcommand("build", "emit a catalog polyhedron document");
  cmd_build->add_option("name", catalog_name,
                        "tetrahedron | pyramid:n | bipyramid:n | cuboid | prism:n")
      ->required();
  cmd_build->add_option("-o,--output", outfile, "output file (default stdout)");

  auto add_input = [&](CLI::App* c) {
    c->add_option("file", file, "input document ('-' or omitted: stdin)");
  };

  auto* cmd_check = app.add_subcommand("check", "coherence verdict (exit 0/1/2)");
  add_input(cmd_check);
  cmd_check->add_flag("--vertex", vertex_flag, "check vertex-coherence instead");

  auto* cmd_solve = app.add_subcommand("solve", "find a coherent labelling or INFEASIBLE");
  add_input(cmd_solve);
  cmd_solve->add_option("--engine", engine)->check(CLI::IsMember({"backtrack", "rotation"}));
  cmd_solve->add_option("-o,--output", outfile);

  auto* cmd_count = app.add_subcommand("count", "count coherent canonical labellings");
  add_input(cmd_count);
  cmd_count->add_option("--engine", engine)->check(CLI::IsMember({"backtrack", "rotation"}));

  auto* cmd_attach = app.add_subcommand("attach", "apply a tetrahedron attachment");
  add_input(cmd_attach);
  cmd_attach->add_option("--mode", mode)->required()->check(
      CLI::IsMember({"a1", "a2", "a3", "a4", "a5"}));
  cmd_attach->add_option("--face", face_opts, "target face id (twice for a5)");
  cmd_attach->add_option("--edge", edge_opt, "vanishing edge id (a2)");
  cmd_attach->add_option("--vertex", vertex_opt, "vanishing vertex id (a3)");
  cmd_attach->add_option("-o,--output", outfile);

  auto* cmd_pyr = app.add_subcommand("pyramidalize", "erect a pyramid over every face");
  add_input(cmd_pyr);
  cmd_pyr->add_option("-o,--output", outfile);

  auto* cmd_dual = app.add_subcommand("dual", "abstract dual (labels transported)");
  add_input(cmd_dual);
  cmd_dual->add_option("-o,--output", outfile);

  auto* cmd_trunc = app.add_subcommand("truncate", "chop one vertex or all of them");
  add_input(cmd_trunc);
  cmd_trunc->add_option("--vertex", vertex_opt, "vertex to chop");
  cmd_trunc->add_flag("--all", all_flag, "chop every vertex");
  cmd_trunc->add_option("-o,--output", outfile);

  auto* cmd_enum = app.add_subcommand("enumerate", "all labellings with minimum on an edge");
  add_input(cmd_enum);
  cmd_enum->add_option("--fix-min-edge", fix_min_edge, "edge that carries label 1")->required();
  cmd_enum->add_option("-o,--output", outfile);

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_build)) {
      auto [p, l] = make_catalog(catalog_name);
      write_output(serialize_document(p, l ? &*l : nullptr), outfile, out);
      return 0;
    }

    if (app.got_subcommand(cmd_check)) {
      auto doc = parse_document(read_input(file, in));
      Labelling l = require_labels(doc);
      auto rep = vertex_flag ? is_vertex_coherent(doc.poly, l) : is_coherent(doc.poly, l);
      const char* what = vertex_flag ? "vertex" : "face";
      if (rep.coherent) {
        out << "COHERENT\n";
        return 0;
      }
      out << "INCOHERENT\n";
      for (int id : rep.offending)
        err << what << " " << id << " has " << rep.per_item[id].count << " descents\n";
      return 1;
    }

    if (app.got_subcommand(cmd_solve)) {
      auto doc = parse_document(read_input(file, in));
      SolveResult r = engine == "rotation" ? solve_by_rotation_selection(doc.poly)
                                           : solve_backtracking(doc.poly);
      err << "explored " << r.nodes_explored
          << (engine == "rotation" ? " selections\n" : " assignments\n");
      if (r.status == SolveStatus::feasible)
        write_output(serialize_document(doc.poly, &*r.witness), outfile, out);
      else
        write_output("INFEASIBLE\n", outfile, out);
      return 0;
    }

    if (app.got_subcommand(cmd_count)) {
      auto doc = parse_document(read_input(file, in));
      std::uint64_t n = engine == "rotation" ? count_by_rotation_selection(doc.poly)
                                             : count_labellings(doc.poly);
      out << n << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_attach)) {
      auto doc = parse_document(read_input(file, in));
      Labelling l = require_labels(doc);
      Attached a = [&] {
        if (mode == "a1") {
          if (face_opts.size() != 1) fail(Errc::UnknownFace, "a1 needs exactly one --face");
          return attach_a1(doc.poly, l, face_opts[0]);
        }
        if (mode == "a2") {
          if (face_opts.size() != 1 || edge_opt < 0)
            fail(Errc::UnknownEdge, "a2 needs one --face and --edge");
          return attach_a2(doc.poly, l, face_opts[0], edge_opt);
        }
        if (mode == "a3") {
          if (face_opts.size() != 1 || vertex_opt < 0)
            fail(Errc::UnknownVertex, "a3 needs one --face and --vertex");
          return attach_a3(doc.poly, l, face_opts[0], vertex_opt);
        }
        if (mode == "a4") {
          if (face_opts.size() != 1) fail(Errc::UnknownFace, "a4 needs exactly one --face");
          return cap_triangle(doc.poly, l, face_opts[0]);
        }
        if (face_opts.size() != 2) fail(Errc::UnknownFace, "a5 needs --face twice");
        return attach_a5(doc.poly, l, face_opts[0], face_opts[1]);
      }();
      report_spec(a.spec, err);
      write_output(serialize_document(a.poly, &a.labels), outfile, out);
      return 0;
    }

    if (app.got_subcommand(cmd_pyr)) {
      auto doc = parse_document(read_input(file, in));
      Labelling l = require_labels(doc);
      auto [p, pl] = pyramidalize(doc.poly, l);
      write_output(serialize_document(p, &pl), outfile, out);
      return 0;
    }

    if (app.got_subcommand(cmd_dual)) {
      auto doc = parse_document(read_input(file, in));
      auto dc = dual(doc.poly);
      if (doc.labels) {
        Labelling dl(dc.dual.edge_count());
        for (int e = 0; e < doc.poly.edge_count(); ++e)
          dl[dc.edge_bijection[e]] = (*doc.labels)[e];
        write_output(serialize_document(dc.dual, &dl), outfile, out);
      } else {
        write_output(serialize_document(dc.dual), outfile, out);
      }
      return 0;
    }

    if (app.got_subcommand(cmd_trunc)) {
      auto doc = parse_document(read_input(file, in));
      Labelling l = require_labels(doc);
      if (all_flag == (vertex_opt >= 0))
        fail(Errc::UnknownVertex, "truncate needs exactly one of --vertex or --all");
      auto [p, pl] = all_flag ? truncate_all(doc.poly, l)
                              : truncate_vertex(doc.poly, l, vertex_opt);
      write_output(serialize_document(p, &pl), outfile, out);
      return 0;
    }

    if (app.got_subcommand(cmd_enum)) {
      auto doc = parse_document(read_input(file, in));
      auto all = enumerate_with_fixed_minimum(doc.poly, fix_min_edge);
      err << all.size() << " labelling(s)\n";
      std::string text;
      for (const auto& l : all) text += serialize_document(doc.poly, &l);
      write_output(text, outfile, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: IO: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cohlab::cli
