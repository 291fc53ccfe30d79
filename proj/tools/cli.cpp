#include "cli.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abspec/algfile.hpp"
#include "abspec/axioms.hpp"
#include "abspec/closure.hpp"
#include "abspec/coherent.hpp"
#include "abspec/dot.hpp"
#include "abspec/duality.hpp"
#include "abspec/errors.hpp"
#include "abspec/representation.hpp"
#include "abspec/separation.hpp"
#include "abspec/spectrum.hpp"

namespace abspec::cli {
namespace {

using nlohmann::ordered_json;

std::string set_str(const Carrier& c, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for_each(s, [&](int x) {
    if (!first) out += ",";
    out += c.names[x];
    first = false;
  });
  return out + "}";
}

ordered_json set_json(const Carrier& c, ElemSet s) {
  ordered_json a = ordered_json::array();
  for_each(s, [&](int x) { a.push_back(c.names[x]); });
  return a;
}

// point-index sets, for opens of spectra
std::string idx_str(ElemSet u) {
  std::string out = "{";
  bool first = true;
  for_each(u, [&](int x) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  });
  return out + "}";
}

ordered_json idx_json(ElemSet u) {
  ordered_json a = ordered_json::array();
  for_each(u, [&](int x) { a.push_back(x); });
  return a;
}

ordered_json topology_json(const FiniteTopology& t) {
  ordered_json a = ordered_json::array();
  for (std::uint64_t m : t.opens) a.push_back(idx_json(ElemSet{m}));
  return a;
}

std::string witness_str(const Carrier& c, const AxiomWitness& w) {
  const auto nm = [&](int i) -> const std::string& { return c.names[w.elems[i]]; };
  if (w.axiom == "i")
    return "times(" + nm(0) + ", " + nm(1) + ") != times(" + nm(1) + ", " + nm(0) + ")";
  if (w.axiom == "i'")
    return "plus(" + nm(0) + ", " + nm(1) + ") != plus(" + nm(1) + ", " + nm(0) + ")";
  if (w.axiom == "ii")
    return "times not associative at (" + nm(0) + ", " + nm(1) + ", " + nm(2) + ")";
  if (w.axiom == "ii'")
    return "plus not associative at (" + nm(0) + ", " + nm(1) + ", " + nm(2) + ")";
  return nm(0) + " in " + nm(1) + "+" + nm(4) + " and " + nm(2) + " in " + nm(3) + "*" +
         nm(4) + " but " + nm(0) + "*" + nm(3) + " misses " + nm(1) + "+" + nm(2);
}

ordered_json axioms_json(const Carrier& c, const AxiomReport& ax) {
  if (ax.pass) return ordered_json{{"pass", true}};
  ordered_json at = ordered_json::array();
  for (int i : ax.violation->elems) at.push_back(c.names[i]);
  return ordered_json{{"pass", false},
                      {"axiom", ax.violation->axiom},
                      {"at", at},
                      {"witness", witness_str(c, *ax.violation)}};
}

ordered_json report_json(const CheckReport& r) {
  ordered_json items = ordered_json::array();
  for (const auto& it : r.items) {
    ordered_json j{{"name", it.name}, {"pass", it.pass}};
    if (!it.detail.empty()) j["detail"] = it.detail;
    items.push_back(j);
  }
  return ordered_json{{"pass", r.pass()}, {"items", items}};
}

void print_report(std::ostream& out, const CheckReport& r) {
  for (const auto& it : r.items) {
    out << "  " << it.name << ": " << (it.pass ? "pass" : "fail");
    if (!it.detail.empty()) out << " (" << it.detail << ")";
    out << "\n";
  }
}

ElemSet parse_elems(const Carrier& c, const std::string& list) {
  ElemSet s;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    int i = c.index_of(cur);
    if (i < 0) throw input_error("unknown element '" + cur + "'");
    s.add(i);
    cur.clear();
  };
  for (char ch : list) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
      flush();
    else
      cur += ch;
  }
  flush();
  return s;
}

struct Ctx {
  std::string file;
  bool json = false;
  Limits lim;
  Algebra alg;
};

// Commands that read the algebra through its spectrum refuse tables failing
// the axioms; the witness is the report and the exit status is 1.
int axioms_failed(const Ctx& ctx, const char* command, const AxiomReport& ax,
                  std::ostream& out) {
  if (ctx.json) {
    ordered_json doc{{"command", command},
                     {"file", ctx.file},
                     {"axioms", axioms_json(ctx.alg.carrier, ax)},
                     {"pass", false}};
    out << doc.dump(2) << "\n";
  } else {
    out << "axioms: fail (" << witness_str(ctx.alg.carrier, *ax.violation) << ")\n";
    out << "result: fail\n";
  }
  return 1;
}

int sep0_failed(const Ctx& ctx, const char* command, const Sep0Result& s0,
                std::ostream& out) {
  const auto& nm = ctx.alg.carrier.names;
  if (ctx.json) {
    ordered_json doc{{"command", command},
                     {"file", ctx.file},
                     {"sep0", ordered_json{{"pass", false},
                                           {"a", nm[s0.a]},
                                           {"b", nm[s0.b]},
                                           {"c", nm[s0.c]}}},
                     {"pass", false}};
    out << doc.dump(2) << "\n";
  } else {
    out << "sep0: fail (" << nm[s0.a] << " <= " << nm[s0.b] << " <= " << nm[s0.c]
        << " but not " << nm[s0.a] << " <= " << nm[s0.c] << ")\n";
    out << "result: fail\n";
  }
  return 1;
}

int cmd_check(const Ctx& ctx, std::uint64_t seed, bool dot, std::ostream& out) {
  ClosureCache cache(ctx.alg);
  if (dot) {
    out << hasse_dot(cache);
    return 0;
  }
  const Carrier& c = ctx.alg.carrier;
  AxiomReport ax = check_preseparative(ctx.alg);
  Sep0Result s0 = check_sep0(cache);

  std::optional<int> nfilters, nideals;
  std::string enum_skip;
  try {
    nfilters = static_cast<int>(enumerate_filters(ctx.alg, ctx.lim).size());
    nideals = static_cast<int>(enumerate_ideals(ctx.alg, ctx.lim).size());
  } catch (const capacity_error& e) {
    enum_skip = e.what();
  }

  std::optional<SepResult> sep;
  std::string sep_skip;
  try {
    sep = check_sep(ctx.alg, ctx.lim);
  } catch (const capacity_error& e) {
    sep_skip = e.what();
  }

  CheckReport calc = check_calculus(ctx.alg, seed);
  bool pass = ax.pass && s0.pass && (!sep || sep->pass) && calc.pass();

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "check";
    doc["file"] = ctx.file;
    doc["carrier"] = ctx.alg.size();
    doc["axioms"] = axioms_json(c, ax);
    ordered_json j0{{"pass", s0.pass}};
    if (!s0.pass) {
      j0["a"] = c.names[s0.a];
      j0["b"] = c.names[s0.b];
      j0["c"] = c.names[s0.c];
    }
    doc["sep0"] = j0;
    if (nfilters) {
      doc["filters"] = *nfilters;
      doc["ideals"] = *nideals;
    }
    if (sep) {
      ordered_json js{{"pass", sep->pass}};
      if (!sep->pass) {
        js["filter"] = set_json(c, sep->f0);
        js["ideal"] = set_json(c, sep->i0);
      }
      doc["sep"] = js;
    } else {
      doc["sep"] = ordered_json{{"skipped", sep_skip}};
    }
    doc["calculus"] = report_json(calc);
    doc["pass"] = pass;
    out << doc.dump(2) << "\n";
  } else {
    out << "carrier: " << ctx.alg.size() << " elements\n";
    if (ax.pass)
      out << "axioms: pass\n";
    else
      out << "axioms: fail (" << witness_str(c, *ax.violation) << ")\n";
    if (s0.pass)
      out << "sep0: pass\n";
    else
      out << "sep0: fail (" << c.names[s0.a] << " <= " << c.names[s0.b] << " <= "
          << c.names[s0.c] << " but not " << c.names[s0.a] << " <= " << c.names[s0.c]
          << ")\n";
    if (nfilters) {
      out << "filters: " << *nfilters << "\n";
      out << "ideals: " << *nideals << "\n";
    } else {
      out << "filters: skipped (" << enum_skip << ")\n";
      out << "ideals: skipped (" << enum_skip << ")\n";
    }
    if (sep) {
      if (sep->pass)
        out << "sep: pass\n";
      else
        out << "sep: fail (no prime pair extends filter " << set_str(c, sep->f0)
            << " and ideal " << set_str(c, sep->i0) << ")\n";
    } else {
      out << "sep: skipped (" << sep_skip << ")\n";
    }
    out << "calculus:\n";
    print_report(out, calc);
    out << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_spectrum(const Ctx& ctx, bool all, bool lspec, bool dot, std::ostream& out) {
  AxiomReport ax = check_preseparative(ctx.alg);
  if (!ax.pass) return axioms_failed(ctx, "spectrum", ax, out);
  const Carrier& c = ctx.alg.carrier;
  const bool proper = !all && c.xi0.has_value() && c.xi1.has_value();
  BitopSpace sp = lspec ? build_lspectrum(ctx.alg, proper, ctx.lim)
                        : build_spectrum(ctx.alg, proper, ctx.lim);
  if (dot) {
    out << hasse_dot(sp);
    return 0;
  }
  CheckReport rep = check_spectrum_axioms(sp);
  JoinStone js = join_and_stone(sp);
  Specialization so = specialization_and_extremes(sp);
  const char* kind = lspec ? "single-valued" : "multivalued";
  const char* var = proper ? "proper" : "all";
  const bool pass = rep.pass();

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "spectrum";
    doc["file"] = ctx.file;
    doc["kind"] = kind;
    doc["variant"] = var;
    ordered_json pts = ordered_json::array();
    for (int i = 0; i < sp.point_count(); ++i)
      pts.push_back(ordered_json{{"name", sp.point_names[i]},
                                 {"ideal", set_json(c, sp.ideal_labels[i])}});
    doc["points"] = pts;
    doc["tplus"] = topology_json(sp.tplus);
    doc["tminus"] = topology_json(sp.tminus);
    doc["axioms"] = report_json(rep);
    doc["stone_space"] = js.stone_space;
    doc["stone_spectrum"] = js.stone_spectrum;
    doc["max"] = idx_json(so.max_points);
    doc["min"] = idx_json(so.min_points);
    doc["pass"] = pass;
    out << doc.dump(2) << "\n";
  } else {
    out << "spectrum: " << var << ", " << sp.point_count() << " point"
        << (sp.point_count() == 1 ? "" : "s") << " (" << kind << ")\n";
    for (int i = 0; i < sp.point_count(); ++i)
      out << "point " << i << ": " << sp.point_names[i] << "\n";
    out << "tplus:";
    for (std::uint64_t m : sp.tplus.opens) out << " " << idx_str(ElemSet{m});
    out << "\n";
    out << "tminus:";
    for (std::uint64_t m : sp.tminus.opens) out << " " << idx_str(ElemSet{m});
    out << "\n";
    out << "axioms:\n";
    print_report(out, rep);
    out << "stone space: " << (js.stone_space ? "yes" : "no") << "\n";
    out << "stone spectrum: " << (js.stone_spectrum ? "yes" : "no") << "\n";
    out << "max points: " << idx_str(so.max_points) << "\n";
    out << "min points: " << idx_str(so.min_points) << "\n";
    out << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_separate(const Ctx& ctx, const std::string& filter_list,
                 const std::string& ideal_list, std::ostream& out) {
  AxiomReport ax = check_preseparative(ctx.alg);
  if (!ax.pass) return axioms_failed(ctx, "separate", ax, out);
  const Carrier& c = ctx.alg.carrier;
  ClosureCache cache(ctx.alg);
  ElemSet f0 = mu(ctx.alg, parse_elems(c, filter_list));
  ElemSet i0 = alpha(ctx.alg, parse_elems(c, ideal_list));
  SeparateResult r = separate(cache, f0, i0);

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "separate";
    doc["file"] = ctx.file;
    doc["f0"] = set_json(c, f0);
    doc["i0"] = set_json(c, i0);
    doc["ok"] = r.ok;
    if (r.ok) {
      doc["filter"] = set_json(c, r.pair.filter);
      doc["ideal"] = set_json(c, r.pair.ideal);
    } else {
      doc["stuck"] = c.names[r.stuck];
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "f0: " << set_str(c, f0) << "\n";
    out << "i0: " << set_str(c, i0) << "\n";
    if (r.ok) {
      out << "filter: " << set_str(c, r.pair.filter) << "\n";
      out << "ideal: " << set_str(c, r.pair.ideal) << "\n";
    } else {
      out << "stuck: " << c.names[r.stuck] << " (no prime pair separates the input)\n";
    }
  }
  return r.ok ? 0 : 1;
}

int cmd_dualize(const Ctx& ctx, bool all, bool lspec, std::ostream& out) {
  AxiomReport ax = check_preseparative(ctx.alg);
  if (!ax.pass) return axioms_failed(ctx, "dualize", ax, out);
  const Carrier& c = ctx.alg.carrier;
  const bool proper = !all && c.xi0.has_value() && c.xi1.has_value();
  BitopSpace sp = lspec ? build_lspectrum(ctx.alg, proper, ctx.lim)
                        : build_spectrum(ctx.alg, proper, ctx.lim);
  CoherentSpace coh = functor_F(sp);
  CheckReport cohrep = is_coherent(coh.topology);
  const bool rt_space = roundtrip_space(sp);
  const bool rt_coherent = roundtrip_coherent(coh);
  FiniteDistLattice ko = ko_lattice(coh);
  NaturalIsos isos = natural_isos(coh, ko, ctx.lim);
  const char* kind = lspec ? "single-valued" : "multivalued";
  const char* var = proper ? "proper" : "all";
  const bool pass = cohrep.pass() && rt_space && rt_coherent;

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "dualize";
    doc["file"] = ctx.file;
    doc["kind"] = kind;
    doc["variant"] = var;
    doc["points"] = sp.point_count();
    doc["coherent"] = report_json(cohrep);
    doc["roundtrip_space"] = rt_space;
    doc["roundtrip_coherent"] = rt_coherent;
    doc["ko_lattice"] = ordered_json{{"size", ko.size}, {"bottom", ko.bottom}, {"top", ko.top}};
    doc["psi"] = isos.psi;
    doc["phi"] = isos.phi.map;
    doc["pass"] = pass;
    out << doc.dump(2) << "\n";
  } else {
    out << "spectrum: " << var << ", " << sp.point_count() << " point"
        << (sp.point_count() == 1 ? "" : "s") << " (" << kind << ")\n";
    out << "coherent:\n";
    print_report(out, cohrep);
    out << "roundtrip space: " << (rt_space ? "pass" : "fail") << "\n";
    out << "roundtrip coherent: " << (rt_coherent ? "pass" : "fail") << "\n";
    out << "ko lattice: " << ko.size << " element" << (ko.size == 1 ? "" : "s") << "\n";
    out << "psi:";
    for (int p : isos.psi) out << " " << p;
    out << "\n";
    out << "phi:";
    for (int p : isos.phi.map) out << " " << p;
    out << "\n";
    out << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_represent(const Ctx& ctx, const std::string& variant, bool dot, std::ostream& out) {
  AxiomReport ax = check_preseparative(ctx.alg);
  if (!ax.pass) return axioms_failed(ctx, "represent", ax, out);
  const Carrier& c = ctx.alg.carrier;

  RepVariant v;
  if (variant == "auto")
    v = (c.xi0.has_value() && c.xi1.has_value()) ? RepVariant::multivalued_proper
                                                 : RepVariant::multivalued_all;
  else if (variant == "multivalued-proper")
    v = RepVariant::multivalued_proper;
  else if (variant == "multivalued-all")
    v = RepVariant::multivalued_all;
  else if (variant == "single-valued-proper")
    v = RepVariant::single_valued_proper;
  else
    v = RepVariant::single_valued_all;

  Representation rep = canonical_rep(ctx.alg, v, ctx.lim);
  if (dot) {
    out << hasse_dot(rep.lattice);
    return 0;
  }
  CheckReport props = check_rep_properties(rep, ctx.lim);
  CheckReport bounds = check_op_bounds(rep);
  CheckReport emb = order_embedding_check(rep);
  const bool pass = props.pass() && bounds.pass() && emb.pass();

  const char* vname = v == RepVariant::multivalued_proper    ? "multivalued-proper"
                      : v == RepVariant::multivalued_all     ? "multivalued-all"
                      : v == RepVariant::single_valued_proper ? "single-valued-proper"
                                                              : "single-valued-all";

  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "represent";
    doc["file"] = ctx.file;
    doc["variant"] = vname;
    doc["points"] = rep.spectrum.point_count();
    doc["lattice"] = ordered_json{{"size", rep.lattice.size},
                                  {"bottom", rep.lattice.bottom},
                                  {"top", rep.lattice.top}};
    doc["phi"] = rep.phi;
    ordered_json opens = ordered_json::array();
    for (int x = 0; x < ctx.alg.size(); ++x) opens.push_back(idx_json(rep.phi_open(x)));
    doc["phi_opens"] = opens;
    doc["properties"] = report_json(props);
    doc["op_bounds"] = report_json(bounds);
    doc["order_embedding"] = report_json(emb);
    doc["pass"] = pass;
    out << doc.dump(2) << "\n";
  } else {
    out << "variant: " << vname << "\n";
    out << "spectrum: " << rep.spectrum.point_count() << " point"
        << (rep.spectrum.point_count() == 1 ? "" : "s") << "\n";
    out << "lattice: " << rep.lattice.size << " element"
        << (rep.lattice.size == 1 ? "" : "s") << "\n";
    out << "phi:\n";
    for (int x = 0; x < ctx.alg.size(); ++x)
      out << "  " << c.names[x] << " -> " << rep.phi[x] << " " << idx_str(rep.phi_open(x))
          << "\n";
    out << "properties:\n";
    print_report(out, props);
    out << "operation bounds:\n";
    print_report(out, bounds);
    out << "order embedding:\n";
    print_report(out, emb);
    out << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

ordered_json op_json(const Algebra& alg, const MultiOp& op) {
  ordered_json rows = ordered_json::array();
  for (int a = 0; a < alg.size(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < alg.size(); ++b) row.push_back(set_json(alg.carrier, op.at(a, b)));
    rows.push_back(row);
  }
  return rows;
}

int cmd_radical(const Ctx& ctx, bool convex, std::ostream& out) {
  AxiomReport ax = check_preseparative(ctx.alg);
  if (!ax.pass) return axioms_failed(ctx, "radical", ax, out);
  ClosureCache cache(ctx.alg);
  Sep0Result s0 = check_sep0(cache);
  if (!s0.pass) return sep0_failed(ctx, "radical", s0, out);

  Algebra r = convex ? convex_ops(ctx.alg, ctx.lim) : radical_ops(ctx.alg, ctx.lim);
  if (ctx.json) {
    ordered_json doc;
    doc["command"] = "radical";
    doc["file"] = ctx.file;
    doc["kind"] = convex ? "convex" : "radical";
    doc["carrier"] = r.size();
    doc["names"] = r.carrier.names;
    if (r.carrier.xi0) doc["xi0"] = r.carrier.names[*r.carrier.xi0];
    if (r.carrier.xi1) doc["xi1"] = r.carrier.names[*r.carrier.xi1];
    doc["times"] = op_json(r, r.times);
    doc["plus"] = op_json(r, r.plus);
    out << doc.dump(2) << "\n";
  } else {
    out << serialize_algebra(r);
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite multivalued algebras: axioms, separation, spectra, duality"};
  app.name("abspec");
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  int cap = 0;
  std::uint64_t seed = 0;
  bool dot = false, all = false, lspec = false, convex = false;
  std::string filter_list, ideal_list;
  std::string variant = "auto";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--file", file, "algebra file")->required();
    sub->add_option("--cap", cap, "override every enumeration cap")->check(CLI::PositiveNumber);
    return sub->add_flag("--json", json, "machine-readable report");
  };

  CLI::App* c_check =
      app.add_subcommand("check", "axioms, the carrier preorder, separation, calculus identities");
  auto* check_json = add_common(c_check);
  c_check->add_option("--seed", seed, "seed for the sampled identity checks");
  c_check->add_flag("--dot", dot, "emit the carrier preorder as dot")->excludes(check_json);

  CLI::App* c_spec = app.add_subcommand("spectrum", "points and both topologies");
  auto* spec_json = add_common(c_spec);
  c_spec->add_flag("--all", all, "admit improper points even when xi0/xi1 are set");
  c_spec->add_flag("--lspectrum", lspec, "single-valued point condition");
  c_spec->add_flag("--dot", dot, "emit the specialization order as dot")->excludes(spec_json);

  CLI::App* c_sep = app.add_subcommand("separate", "extend a filter/ideal pair to a prime pair");
  add_common(c_sep);
  c_sep->add_option("--filter", filter_list, "elements generating the filter");
  c_sep->add_option("--ideal", ideal_list, "elements generating the ideal");

  CLI::App* c_dual =
      app.add_subcommand("dualize", "coherent space, round trips, compact-open lattice");
  add_common(c_dual);
  c_dual->add_flag("--all", all, "admit improper points even when xi0/xi1 are set");
  c_dual->add_flag("--lspectrum", lspec, "single-valued point condition");

  CLI::App* c_rep = app.add_subcommand("represent", "canonical lattice representation");
  auto* rep_json = add_common(c_rep);
  c_rep->add_option("--variant", variant, "spectrum variant (default: multivalued, proper when xi0/xi1 are set)")
      ->check(CLI::IsMember({"auto", "multivalued-proper", "multivalued-all",
                             "single-valued-proper", "single-valued-all"}));
  c_rep->add_flag("--dot", dot, "emit the representation lattice as dot")->excludes(rep_json);

  CLI::App* c_rad = app.add_subcommand("radical", "radical or convex operation tables");
  add_common(c_rad);
  c_rad->add_flag("--convex", convex, "convex tables instead of radical ones");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Ctx ctx;
    ctx.file = file;
    ctx.json = json;
    if (cap > 0) {
      ctx.lim = Limits{cap, cap, cap, cap, cap};
      err << "warning: every enumeration cap is overridden to " << cap
          << "; runtimes grow exponentially past the defaults\n";
    }
    ctx.alg = load_algebra_file(file);

    if (app.got_subcommand(c_check)) return cmd_check(ctx, seed, dot, out);
    if (app.got_subcommand(c_spec)) return cmd_spectrum(ctx, all, lspec, dot, out);
    if (app.got_subcommand(c_sep)) return cmd_separate(ctx, filter_list, ideal_list, out);
    if (app.got_subcommand(c_dual)) return cmd_dualize(ctx, all, lspec, out);
    if (app.got_subcommand(c_rep)) return cmd_represent(ctx, variant, dot, out);
    return cmd_radical(ctx, convex, out);
  } catch (const parse_error& e) {
    err << file << ":" << e.line << ": error: " << e.what() << "\n";
    return 2;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace abspec::cli
