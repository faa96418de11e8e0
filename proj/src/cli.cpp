#include "qkchev/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkchev/verify.hpp"

namespace qkchev {

namespace {

GroupDescriptor descriptor(const std::string& family, int n) {
  if (family != "A" && family != "C")
    throw CLI::ValidationError("--family", "must be A or C");
  if (n < 2) throw CLI::ValidationError("--n", "must be at least 2");
  return {family == "A" ? Family::A : Family::C, n};
}

struct ProductArgs {
  std::string space = "gb";
  std::string family = "A";
  int n = 0;
  int k = 0;
  int k1 = 0, k2 = 0;
  std::string w;
  std::string format = "pretty";
  bool star = false;
};

int emit_combo(const SchubertCombo& combo, const std::string& format,
               std::ostream& out) {
  if (format == "json")
    out << combo.to_json();
  else if (format == "tsv")
    out << combo.to_tsv();
  else
    out << combo.pretty();
  return 0;
}

int run_product(const ProductArgs& args, std::ostream& out, std::ostream& err) {
  GroupDescriptor d = descriptor(args.family, args.n);
  WeylElement w = parse_window(d, args.w);
  SchubertCombo combo;
  if (args.space == "gb") {
    GBOptions opt;
    opt.star = args.star;
    combo = chevalley_GB(w, args.k, opt);
  } else if (args.space == "grass") {
    if (!is_min_coset_rep(w, grassmannian_parabolic(d, args.k))) {
      err << "error: w is not a minimal coset representative for k=" << args.k
          << "\n";
      return 2;
    }
    combo = d.family == Family::A ? chevalley_grassmannian_A(w, args.k)
                                  : chevalley_grassmannian_C(w, args.k);
  } else if (args.space == "twostep") {
    if (!is_min_coset_rep(w, twostep_parabolic(d, args.k1, args.k2))) {
      err << "error: w is not a minimal coset representative for k1/k2\n";
      return 2;
    }
    combo = chevalley_twostep(w, args.k1, args.k2, args.k);
  } else {
    err << "error: unknown space " << args.space << "\n";
    return 2;
  }
  return emit_combo(combo, args.format, out);
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chevalley products for flag manifolds via the quantum "
               "alcove model, with differential verification sweeps"};
  app.require_subcommand(1);

  ProductArgs pa;
  auto* product = app.add_subcommand("product", "expand a line-bundle product");
  product->add_option("--space", pa.space, "gb, grass, or twostep")
      ->check(CLI::IsMember({"gb", "grass", "twostep"}));
  product->add_option("--family", pa.family, "A or C");
  product->add_option("--n", pa.n, "window size")->required();
  product->add_option("--k", pa.k, "fundamental weight index (target for twostep)");
  product->add_option("--k1", pa.k1, "first removed index (twostep)");
  product->add_option("--k2", pa.k2, "second removed index (twostep)");
  product->add_option("--w", pa.w, "window, e.g. \"3 -1 2\"")->required();
  product->add_option("--format", pa.format, "pretty, json, or tsv")
      ->check(CLI::IsMember({"pretty", "json", "tsv"}));
  product->add_flag("--star", pa.star, "use the column-ordered chain (type A gb)");

  std::string ch_family = "A";
  int ch_n = 0, ch_k = 0;
  bool ch_star = false;
  auto* chain = app.add_subcommand("chain", "print a fundamental-weight chain");
  chain->add_option("--family", ch_family, "A or C");
  chain->add_option("--n", ch_n, "window size")->required();
  chain->add_option("--k", ch_k, "fundamental weight index")->required();
  chain->add_flag("--star", ch_star, "column-ordered variant (type A)");

  std::string g_family = "A";
  int g_n = 0;
  std::string g_format = "dot";
  auto* qbg = app.add_subcommand("qbg", "export the quantum Bruhat graph");
  qbg->add_option("--family", g_family, "A or C");
  qbg->add_option("--n", g_n, "window size")->required();
  qbg->add_option("--format", g_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  std::string e_family = "A";
  int e_n = 0, e_k = 0;
  std::string e_w;
  bool e_star = false;
  auto* enumerate = app.add_subcommand("enumerate", "list admissible subsets");
  enumerate->add_option("--family", e_family, "A or C");
  enumerate->add_option("--n", e_n, "window size")->required();
  enumerate->add_option("--k", e_k, "fundamental weight index")->required();
  enumerate->add_option("--w", e_w, "window")->required();
  enumerate->add_flag("--star", e_star, "column-ordered chain (type A)");

  std::string v_suite;
  int v_n = 0, v_jobs = 0;
  bool v_quiet = false;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("--suite", v_suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", v_n, "window-size bound (0 = suite default)");
  verify->add_option("--jobs", v_jobs, "worker threads (default QKCHEV_JOBS or 1)");
  verify->add_flag("--quiet", v_quiet, "suppress per-row output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (product->parsed()) return run_product(pa, out, err);
    if (chain->parsed()) {
      GroupDescriptor d = descriptor(ch_family, ch_n);
      LabeledChain c = make_chain(d, ch_k, ch_star);
      out << c.str();
      out << "split_index\t" << c.split_index << "\n";
      return 0;
    }
    if (qbg->parsed()) {
      QbgGraph g = build_qbg(descriptor(g_family, g_n));
      out << (g_format == "json" ? export_json(g) : export_dot(g));
      return 0;
    }
    if (enumerate->parsed()) {
      GroupDescriptor d = descriptor(e_family, e_n);
      WeylElement w = parse_window(d, e_w);
      LabeledChain c = make_chain(d, e_k, e_star);
      out << "[";
      bool first = true;
      for (const auto& a : enumerate_admissible(w, c)) {
        out << (first ? "" : ",") << "\n  " << admissible_to_json(w, c, a);
        first = false;
      }
      out << "\n]\n";
      return 0;
    }
    if (verify->parsed()) {
      SweepReport rep = run_suite(v_suite, v_n, v_jobs);
      if (!v_quiet) out << report_tsv(rep);
      out << "# suite=" << rep.suite << " n<=" << rep.nmax << " rows="
          << rep.rows.size() << " failures=" << rep.failures() << " time="
          << rep.seconds << "s\n";
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qkchev
