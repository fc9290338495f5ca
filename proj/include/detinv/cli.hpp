#pragma once

#include "detinv/detinv.hpp"
#include "detinv/json_io.hpp"
#include "detinv/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace detinv::cli {

using nlohmann::json;

/// Bad invocation (exit 2), as opposed to a well-formed request the mathematics rejects (exit 1).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One '#' per box, rows left-aligned. The zero partition renders as a single ".".
inline std::string young_diagram(const Partition& x) {
  if (x.is_zero()) return ".\n";
  std::string out;
  for (int part : x.parts()) out += std::string(static_cast<std::size_t>(part), '#') + '\n';
  return out;
}

inline DegreeWindow parse_window(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) throw UsageError("--window expects lo..hi, got '" + text + "'");
  const int lo = std::stoi(mt[1].str());
  const int hi = std::stoi(mt[2].str());
  if (lo > hi) throw UsageError("--window: lo > hi in '" + text + "'");
  return DegreeWindow(lo, hi);
}

inline std::vector<Partition> parse_gens(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("--gens expects a JSON array of partitions");
  std::vector<Partition> out;
  for (const auto& g : j) out.push_back(json_io::partition_from(g));
  return out;
}

namespace detail {

enum class Format { json, csv, pretty };

struct Options {
  int m = 0;
  int n = 0;
  std::string format;
  bool json_errors = false;

  // Ideal sources.
  std::string gens;
  std::string input;
  std::string kind;
  int p = 0;
  int d = 0;

  std::string second;
  std::string window;
  int by = 0;
  int min_l = -1;
  std::string z;
  int l = -1;
  int a = 0;
  int b = 0;
  int ds = -1;
  int entry_bound = -1;
  int big_n = 0;
  std::string weight;
  std::vector<int> qargs;
};

struct Session {
  Options opt;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  Format format(Format fallback, bool csv_ok = true) const {
    if (opt.format.empty()) return fallback;
    if (opt.format == "json") return Format::json;
    if (opt.format == "pretty") return Format::pretty;
    if (opt.format == "csv") {
      if (!csv_ok) throw UsageError("--format csv is not available for this command");
      return Format::csv;
    }
    throw UsageError("--format must be json, csv or pretty");
  }

  MatrixContext context(int m, int n) const {
    if (m == 0 || n == 0) throw UsageError("both -m and -n are required");
    if (m < n) {
      err << "note: m < n, transposing to m=" << n << " n=" << m << '\n';
      std::swap(m, n);
    }
    return MatrixContext(m, n);
  }

  MatrixContext context() const { return context(opt.m, opt.n); }

  InvariantIdeal ideal() const {
    const int sources = int(!opt.gens.empty()) + int(!opt.input.empty()) + int(!opt.kind.empty());
    if (sources > 1) throw UsageError("give at most one of --gens, --input, --kind");
    if (!opt.kind.empty()) {
      const auto ctx = context();
      if (opt.p == 0 || opt.d == 0) throw UsageError("--kind needs -p and -d");
      if (opt.kind == "power") return power_of_minors(ctx, opt.p, opt.d);
      if (opt.kind == "symbolic") return symbolic_power(ctx, opt.p, opt.d);
      if (opt.kind == "saturated") return saturated_power(ctx, opt.p, opt.d);
      throw UsageError("--kind must be power, symbolic or saturated");
    }
    if (!opt.gens.empty()) return make_ideal(context(), parse_gens(opt.gens));
    std::string text;
    if (opt.input.empty() || opt.input == "-") {
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
      std::ifstream f(opt.input);
      if (!f) throw UsageError("cannot read " + opt.input);
      text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    auto doc = json_io::ideal_document_from(json::parse(text));
    if (opt.m != 0 || opt.n != 0) {
      doc.m = opt.m ? opt.m : doc.m;
      doc.n = opt.n ? opt.n : doc.n;
    }
    return make_ideal(context(doc.m, doc.n), std::move(doc.gens));
  }

  DegreeWindow window() const {
    if (opt.window.empty()) throw UsageError("--window lo..hi is required");
    return parse_window(opt.window);
  }
};

inline std::string parts_text(const Partition& x) {
  std::string out;
  for (std::size_t i = 0; i < x.parts().size(); ++i) out += (i ? " " : "") + std::to_string(x.parts()[i]);
  return out;
}

inline std::string weight_text(const DominantWeight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.entries().size(); ++i) out += (i ? " " : "") + std::to_string(w.entries()[i]);
  return out;
}

inline void print_ideal(const Session& s, const InvariantIdeal& a) {
  switch (s.format(Format::json)) {
    case Format::json:
      s.out << json_io::ideal(a).dump() << '\n';
      break;
    case Format::csv:
      s.out << "index,partition\n";
      for (std::size_t i = 0; i < a.gens().size(); ++i) s.out << i << ',' << parts_text(a.gens()[i]) << '\n';
      break;
    case Format::pretty:
      s.out << "m=" << a.context().m << " n=" << a.context().n << ", " << a.gens().size() << " generator(s)\n";
      for (const auto& x : a.gens()) s.out << '\n' << x.str() << '\n' << young_diagram(x);
      break;
  }
}

inline void print_zpairs(const Session& s, const std::vector<ZPair>& pairs) {
  switch (s.format(Format::json)) {
    case Format::json:
      s.out << json_io::zpairs(pairs).dump() << '\n';
      break;
    case Format::csv:
      s.out << "l,z\n";
      for (const auto& zp : pairs) s.out << zp.l << ',' << parts_text(zp.z) << '\n';
      break;
    case Format::pretty:
      s.out << pairs.size() << " pair(s)\n";
      for (const auto& zp : pairs) s.out << "\nl=" << zp.l << " z=" << zp.z.str() << '\n' << young_diagram(zp.z);
      break;
  }
}

inline void print_character(const Session& s, const MatrixContext& ctx, const EquivariantCharacter& c, const DegreeWindow& w,
                            const std::string& label) {
  switch (s.format(Format::json)) {
    case Format::json:
      s.out << json_io::ext_reports(c, w).dump() << '\n';
      break;
    case Format::csv:
      s.out << "j,degree,wm,wn,mult\n";
      for (const auto& [k, mult] : c.entries())
        s.out << k.index << ',' << k.degree << ',' << weight_text(k.wm) << ',' << weight_text(k.wn) << ',' << mult << '\n';
      break;
    case Format::pretty:
      s.out << label << ", degrees " << w.lo << ".." << w.hi << '\n';
      if (c.empty()) s.out << "(no terms in window)\n";
      for (int j : c.indices()) {
        s.out << "\nj=" << j << '\n';
        for (const auto& t : c.terms(j)) {
          s.out << "  deg " << t.degree << "  S_" << t.wm.str() << "C^" << ctx.m << " (x) S_" << t.wn.str() << "C^" << ctx.n;
          if (t.multiplicity != 1) s.out << "  x" << t.multiplicity;
          s.out << "  dim " << dim_term(t, ctx.m, ctx.n) << '\n';
        }
      }
      break;
  }
}

// Verbs.

inline int cmd_ideal(Session& s, const InvariantIdeal& a) {
  print_ideal(s, a);
  return 0;
}

inline int cmd_compare(Session& s) {
  if (s.opt.gens.empty() || s.opt.second.empty()) throw UsageError("compare needs --gens and --second");
  const auto ctx = s.context();
  const auto a = make_ideal(ctx, parse_gens(s.opt.gens));
  const auto b = make_ideal(ctx, parse_gens(s.opt.second));
  const bool ab = ideal_leq(a, b);
  const bool ba = ideal_leq(b, a);
  const std::string rel = ab && ba ? "equal" : ab ? "first_contains_second" : ba ? "second_contains_first" : "incomparable";
  if (s.format(Format::json, false) == Format::json)
    s.out << json{{"first_contains_second", ab}, {"second_contains_first", ba}, {"relation", rel}}.dump() << '\n';
  else
    s.out << rel << '\n';
  return 0;
}

inline int cmd_zset(Session& s) {
  auto pairs = zset(s.ideal());
  if (s.opt.min_l >= 0) pairs = saturation_filter(pairs, s.opt.min_l);
  print_zpairs(s, pairs);
  return 0;
}

inline int cmd_ext(Session& s) {
  const auto w = s.window();
  if (!s.opt.z.empty() || s.opt.l >= 0) {
    if (s.opt.l < 0) throw UsageError("--z needs --l");
    const auto ctx = s.context();
    const ZPair zp(s.opt.z.empty() ? Partition{} : json_io::partition_from(json::parse(s.opt.z)), s.opt.l);
    print_character(s, ctx, ext_jzl(ctx, zp, w), w, "Ext(J_{" + zp.z.str() + "," + std::to_string(zp.l) + "}, S)");
    return 0;
  }
  const auto a = s.ideal();
  if (s.opt.second.empty()) {
    print_character(s, a.context(), ext_quotient(a, w), w, "Ext(S/I, S)");
    return 0;
  }
  const auto b = make_ideal(a.context(), parse_gens(s.opt.second));
  const auto r = ext_map_analysis(a, b, w);
  switch (s.format(Format::json, false)) {
    case Format::json:
      s.out << json{{"kernel", json_io::ext_reports(r.kernel, w)},
                    {"image", json_io::ext_reports(r.image, w)},
                    {"cokernel", json_io::ext_reports(r.cokernel, w)}}
                   .dump()
            << '\n';
      break;
    default:
      print_character(s, a.context(), r.kernel, w, "kernel");
      s.out << '\n';
      print_character(s, a.context(), r.image, w, "image");
      s.out << '\n';
      print_character(s, a.context(), r.cokernel, w, "cokernel");
  }
  return 0;
}

inline int cmd_reg(Session& s) {
  const auto a = s.ideal();
  const int r = regularity(a);
  if (s.format(Format::json, false) == Format::json)
    s.out << json{{"reg", r}, {"reg_quotient", r - 1}}.dump() << '\n';
  else
    s.out << "reg(I) = " << r << "\nreg(S/I) = " << r - 1 << '\n';
  return 0;
}

inline int cmd_lc(Session& s) {
  const auto ctx = s.context();
  if (s.opt.ds >= 0) {
    const auto w = s.window();
    const std::optional<int> bound = s.opt.entry_bound >= 0 ? std::optional<int>(s.opt.entry_bound) : std::nullopt;
    print_character(s, ctx, ds_character(ctx, s.opt.ds, w, bound), w, "D_" + std::to_string(s.opt.ds));
    return 0;
  }
  if (s.opt.p == 0) throw UsageError("lc needs -p (or --ds with --window)");
  const auto t = lc_table(ctx, s.opt.p);
  switch (s.format(Format::json)) {
    case Format::json:
      s.out << json_io::lc_table(t).dump() << '\n';
      break;
    case Format::csv:
      s.out << "j,s,mult\n";
      for (const auto& [j, row] : t.rows)
        for (const auto& [sv, mult] : row) s.out << j << ',' << sv << ',' << mult << '\n';
      break;
    case Format::pretty:
      s.out << "H^j_{I_" << t.p << "}(S), m=" << ctx.m << " n=" << ctx.n << '\n';
      for (const auto& [j, row] : t.rows) {
        s.out << "  H^" << j << " =";
        bool first = true;
        for (const auto& [sv, mult] : row) {
          s.out << (first ? " " : " + ") << (mult == 1 ? std::string() : mult.str()) << "D_" << sv;
          first = false;
        }
        s.out << '\n';
      }
      s.out << (ctx.m == ctx.n
                    ? "note: m = n, so these are composition-factor multiplicities; the modules need not be semisimple.\n"
                    : "note: m > n, so each H^j is the direct sum of its composition factors.\n");
      break;
  }
  return 0;
}

inline int cmd_betti(Session& s) {
  const auto ctx = s.context();
  if (s.opt.a == 0 || s.opt.b == 0) throw UsageError("betti needs -a and -b");
  const auto bp = betti_polynomial(ctx, s.opt.a, s.opt.b);
  const auto table = betti_table(bp, ctx);
  switch (s.format(Format::json)) {
    case Format::json: {
      json j = json_io::betti_polynomial(bp);
      j["table"] = json_io::betti_table(table);
      s.out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      s.out << table.csv();
      break;
    case Format::pretty:
      s.out << table.pretty();
      break;
  }
  return 0;
}

inline int cmd_schurdim(Session& s) {
  if (s.opt.big_n <= 0) throw UsageError("schurdim needs -N > 0");
  if (s.opt.weight.empty()) throw UsageError("schurdim needs --weight");
  const json w = json::parse(s.opt.weight);
  if (!w.is_array()) throw std::invalid_argument("--weight expects a JSON array of integers");
  const DominantWeight lam(w.get<std::vector<int>>());
  const BigInt dim = dim_schur(lam, s.opt.big_n);
  if (s.format(Format::json, false) == Format::json)
    s.out << json{{"N", s.opt.big_n}, {"weight", json_io::weight(lam)}, {"dim", json_io::big(dim)}}.dump() << '\n';
  else
    s.out << dim << '\n';
  return 0;
}

inline int cmd_qbinom(Session& s) {
  if (s.opt.qargs.size() != 2) throw UsageError("qbinom takes two arguments a b");
  const auto poly = qbinomial(s.opt.qargs[0], s.opt.qargs[1]);
  if (s.format(Format::pretty, false) == Format::pretty) {
    s.out << poly.str() << '\n';
  } else {
    json coeffs = json::array();
    for (int e = 0; e <= poly.degree(); ++e) coeffs.push_back(json_io::big(poly.coefficient(e)));
    s.out << json{{"a", s.opt.qargs[0]}, {"b", s.opt.qargs[1]}, {"coefficients", coeffs}}.dump() << '\n';
  }
  return 0;
}

inline int cmd_selftest(Session& s) {
  int failed = 0;
  for (const auto& r : run_golden_corpus()) {
    const char* tag = !r.counted ? "NOTE" : r.ok ? "ok  " : "FAIL";
    s.out << tag << "  " << r.name;
    if (!r.detail.empty()) s.out << "  (" << r.detail << ')';
    s.out << '\n';
    if (r.counted && !r.ok) ++failed;
  }
  s.out << (failed ? std::to_string(failed) + " golden check(s) failed\n" : "all golden checks passed\n");
  return failed ? 1 : 0;
}

inline void report_error(Session& s, int code, const std::string& kind, const std::string& message) {
  if (s.opt.json_errors)
    s.out << json{{"error", {{"exit", code}, {"kind", kind}, {"message", message}}}}.dump() << '\n';
  s.err << "error: " << message << '\n';
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Returns the process exit status.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!args.empty() && args.front() == "ideal") args.erase(args.begin());

  detail::Session s{{}, in, out, err};
  auto& o = s.opt;

  CLI::App app{"GL-invariant ideals of the generic matrix: classification and homological invariants", "detinv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* c) {
    c->add_option("-m", o.m, "rows of the generic matrix");
    c->add_option("-n", o.n, "columns of the generic matrix");
    c->add_option("--format", o.format, "json, csv or pretty");
    c->add_flag("--json-errors", o.json_errors, "also print errors as a JSON object on stdout");
  };
  auto ideal_source = [&](CLI::App* c) {
    c->add_option("--gens", o.gens, "generators as a JSON array of partitions");
    c->add_option("--input", o.input, "ideal JSON document ('-' for stdin)");
    c->add_option("--kind", o.kind, "power, symbolic or saturated (with -p, -d)");
    c->add_option("-p", o.p, "minor size");
    c->add_option("-d", o.d, "exponent");
  };

  std::string verb;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->callback([&verb, name] { verb = name; });
    common(c);
    return c;
  };

  ideal_source(add("normalize", "canonical form of an ideal"));
  auto* compare = add("compare", "containment between two ideals");
  compare->add_option("--gens", o.gens, "first ideal");
  compare->add_option("--second", o.second, "second ideal");
  for (const char* name : {"power", "symbolic", "saturated"}) {
    const std::string what = std::string(name) == "power" ? "d-th" : name;
    auto* c = add(name, what + " power of the ideal of p x p minors");
    c->add_option("-p", o.p)->required();
    c->add_option("-d", o.d)->required();
  }
  auto* sat = add("saturate", "saturation with respect to I_p");
  ideal_source(sat);
  sat->add_option("--by", o.by, "saturate with respect to I_by")->required();
  auto* zs = add("zset", "index set of the Ext filtration");
  ideal_source(zs);
  zs->add_option("--min-l", o.min_l, "keep pairs with l >= min-l");
  auto* ext = add("ext", "windowed Ext(S/I, S) character");
  ideal_source(ext);
  ext->add_option("--window", o.window, "degree window lo..hi");
  ext->add_option("--second", o.second, "smaller ideal B: analyse Ext(S/I) -> Ext(S/B)");
  ext->add_option("--z", o.z, "partition z for a single J_{z,l}");
  ext->add_option("--l", o.l, "l for a single J_{z,l}");
  ideal_source(add("reg", "Castelnuovo-Mumford regularity"));
  auto* lc = add("lc", "local cohomology multiplicities of I_p");
  lc->add_option("-p", o.p);
  lc->add_option("--ds", o.ds, "windowed character of D_s instead");
  lc->add_option("--window", o.window, "degree window lo..hi");
  lc->add_option("--entry-bound", o.entry_bound, "bound |lambda_i| for D_s with 0<s<n");
  auto* betti = add("betti", "Betti polynomial and table of I_{a x b}");
  betti->add_option("-a", o.a)->required();
  betti->add_option("-b", o.b)->required();
  auto* sd = add("schurdim", "dimension of a Schur functor");
  sd->add_option("-N", o.big_n)->required();
  sd->add_option("--weight", o.weight, "dominant weight as a JSON array")->required();
  add("qbinom", "Gauss polynomial [a choose b]")->add_option("args", o.qargs, "a b")->expected(2);
  add("selftest", "run the embedded golden corpus");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::report_error(s, 2, "usage", e.what());
    return 2;
  }

  try {
    if (verb == "normalize") return detail::cmd_ideal(s, s.ideal());
    if (verb == "compare") return detail::cmd_compare(s);
    if (verb == "power") return detail::cmd_ideal(s, power_of_minors(s.context(), o.p, o.d));
    if (verb == "symbolic") return detail::cmd_ideal(s, symbolic_power(s.context(), o.p, o.d));
    if (verb == "saturated") return detail::cmd_ideal(s, saturated_power(s.context(), o.p, o.d));
    if (verb == "saturate") return detail::cmd_ideal(s, saturate(s.ideal(), o.by));
    if (verb == "zset") return detail::cmd_zset(s);
    if (verb == "ext") return detail::cmd_ext(s);
    if (verb == "reg") return detail::cmd_reg(s);
    if (verb == "lc") return detail::cmd_lc(s);
    if (verb == "betti") return detail::cmd_betti(s);
    if (verb == "schurdim") return detail::cmd_schurdim(s);
    if (verb == "qbinom") return detail::cmd_qbinom(s);
    if (verb == "selftest") return detail::cmd_selftest(s);
    throw UsageError("unknown command");
  } catch (const UsageError& e) {
    detail::report_error(s, 2, "usage", e.what());
    return 2;
  } catch (const HypothesisViolation& e) {
    detail::report_error(s, 1, "hypothesis", e.what());
    return 1;
  } catch (const json::exception& e) {
    detail::report_error(s, 1, "input", e.what());
    return 1;
  } catch (const std::exception& e) {
    detail::report_error(s, 1, "domain", e.what());
    return 1;
  }
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}

}  // namespace detinv::cli
