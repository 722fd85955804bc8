#include "qcalc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcalc/error.hpp"
#include "qcalc/io.hpp"
#include "qcalc/localization.hpp"
#include "qcalc/render.hpp"

namespace qcalc {

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string method = "pd";
  std::string what;
  std::string format = "text";
  std::string region = "strict";
  bool letters = false;
  bool timings = false;
  bool count = false;
  long budget = 8;
};

Style style_of(const Options& o) {
  bool latex = o.format == "latex";
  if (o.letters) return latex ? Style::LatexLetters : Style::Letters;
  return latex ? Style::Latex : Style::Ascii;
}

Format format_of(const Options& o) { return o.format == "latex" ? Format::Latex : Format::Text; }

Json read_input(const std::string& input, std::istream& in) {
  if (input.empty()) throw InvalidInput("missing input (a path, inline JSON, or - for stdin)");
  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (input.find_first_not_of(" \t\n") != std::string::npos &&
             input[input.find_first_not_of(" \t\n")] == '{') {
    text = input;
  } else {
    std::ifstream file(input);
    if (!file) throw InvalidInput("cannot read input file '" + input + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return parse_json(text);
}

void print_poly(std::ostream& out, const Options& o, const char* target, const Polynomial& p) {
  if (o.format == "json") {
    Json j;
    j["target"] = target;
    j["method"] = o.method;
    if (o.command == "csm" && o.method == "pd") j["region"] = o.region;
    j["value"] = to_string(p, o.letters ? Style::Letters : Style::Ascii);
    out << j.dump(2) << '\n';
  } else {
    out << to_string(p, style_of(o)) << '\n';
  }
}

std::string yes_no(bool b) { return b ? "yes" : "NO"; }

void print_report(std::ostream& out, const ConsistencyReport& rep, const Options& o) {
  Style style = o.letters ? Style::Letters : Style::Ascii;
  const Dims& dims = rep.r.dims();
  out << "dims";
  for (int v : dims.values()) out << ' ' << v;
  out << "\nrank";
  for (int i = 0; i <= dims.n(); ++i)
    for (int j = i + 1; j <= dims.n(); ++j) out << ' ' << i << ',' << j << '=' << rep.r.at(i, j);
  out << "\nz(r) " << rep.z << "  l(z) " << rep.length_z << "  L " << rep.L << "  |D_Hom| " << rep.dhom
      << '\n';
  for (const auto& res : rep.results) {
    std::string label = std::string(name(res.target)) + " " + name(res.method);
    out << std::left << std::setw(12) << label << std::right;
    if (res.ok)
      out << to_string(res.value, style);
    else
      out << "error: " << res.error;
    if (o.timings) out << "  [" << std::fixed << std::setprecision(1) << res.millis << " ms]";
    out << '\n';
  }
  out << "qpoly agree        " << yes_no(rep.qpoly_agree) << '\n'
      << "csm agree          " << yes_no(rep.csm_agree) << '\n'
      << "degree law         " << yes_no(rep.degree_law) << '\n'
      << "leading-term law   " << yes_no(rep.leading_term_law) << '\n'
      << "D_Hom containment  " << yes_no(rep.dhom_containment) << '\n';
  const Counts& c = rep.counts;
  out << "counts perm " << c.perm << ", RP* " << c.rp_star << ", P " << c.p_total << ", CGPD " << c.cgpd
      << ", CGPD_inf " << c.cgpd_min << '\n';
  out << "result " << (rep.ok() ? "ok" : "FAILED") << '\n';
}

std::string dream_line(const PipeDream& dream) {
  std::string s = to_string(trace(dream)) + ":";
  for (const Cell& c : dream.crosses) s += " (" + std::to_string(c.q) + "," + std::to_string(c.p) + ")";
  return s;
}

std::string cgpd_line(const Cgpd& cgpd) {
  std::string s;
  for (std::size_t i = 0; i < cgpd.rects.size(); ++i) {
    if (i) s += "  ";
    for (std::size_t j = 0; j < cgpd.rects[i].size(); ++j) {
      if (j) s += '/';
      for (Tile t : cgpd.rects[i][j]) s += tile_code(t);
    }
  }
  return s;
}

int cmd_enum(const Options& o, const Json& input, std::ostream& out) {
  static const std::vector<std::string> kinds = {"orbits", "perm", "rp", "rpstar", "p", "cgpd", "cgpd-min"};
  if (std::find(kinds.begin(), kinds.end(), o.what) == kinds.end())
    throw InvalidInput("enum --what must be one of orbits, perm, rp, rpstar, p, cgpd, cgpd-min");
  if (o.region != "strict" && o.what != "p") throw InvalidInput("--region applies only to enum --what p");
  bool json = o.format == "json";
  Json items = Json::array();
  std::vector<std::string> lines;

  if (o.what == "orbits") {
    for (const auto& r : enumerate_rank_arrays(dims_from_json(input))) {
      items.push_back(to_json(r));
      std::string line;
      for (int i = 0; i <= r.dims().n(); ++i)
        for (int j = i + 1; j <= r.dims().n(); ++j)
          line += (line.empty() ? "" : " ") + std::to_string(i) + "," + std::to_string(j) + "=" +
                  std::to_string(r.at(i, j));
      lines.push_back(line.empty() ? "(no maps)" : line);
    }
  } else {
    RankArray r = orbit_from_json(input);
    const Dims& dims = r.dims();
    auto add_dream = [&](const PipeDream& dream) {
      items.push_back(to_json(dream));
      lines.push_back(dream_line(dream));
    };
    if (o.what == "perm") {
      for (const auto& v : perm_set(r)) {
        items.push_back(to_json(v));
        lines.push_back(to_string(v));
      }
    } else if (o.what == "rp" || o.what == "rpstar") {
      Region region = o.what == "rp" ? Region::Full : Region::Strict;
      for (const auto& dream : enumerate(dims, zelevinsky_permutation(r), region, Mode::Reduced)) add_dream(dream);
    } else if (o.what == "p") {
      Region region = o.region == "full" ? Region::Full : Region::Strict;
      for (const auto& v : perm_set(r))
        for (const auto& dream : enumerate(dims, v, region, Mode::All)) add_dream(dream);
    } else {
      auto all = enumerate_cgpd(r);
      int best = -1;
      for (const auto& c : all) best = best < 0 ? crossing_count(c) : std::min(best, crossing_count(c));
      for (const auto& c : all) {
        if (o.what == "cgpd-min" && crossing_count(c) != best) continue;
        items.push_back(to_json(c));
        lines.push_back(cgpd_line(c));
      }
    }
  }
  if (o.count) {
    out << items.size() << '\n';
  } else if (json) {
    out << items.dump(2) << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
  return 0;
}

int cmd_render(const Options& o, const Json& input, std::ostream& out) {
  Format format = format_of(o);
  bool json = o.format == "json";
  if (o.what == "lacing") {
    LaceArray s = lace_array(orbit_from_json(input));
    out << (json ? lace_json(s).dump(2) + "\n" : render_lacing(s, format));
  } else if (o.what == "pipedream") {
    PipeDream dream = pipedream_from_json(input);
    out << (json ? to_json(dream).dump(2) + "\n" : render_pipedream(dream, format));
  } else if (o.what == "cgpd") {
    Cgpd cgpd = cgpd_from_json(input);
    if (has_orbit(input)) validate(cgpd, orbit_from_json(input));
    out << (json ? to_json(cgpd).dump(2) + "\n" : render_cgpd(cgpd, format));
  } else if (o.what == "zmatrix") {
    Rep rep = input.contains("phi") ? rep_from_json(input) : representative(lace_array(orbit_from_json(input)));
    IntMatrix z = zelevinsky_matrix(rep);
    if (json) {
      Json rows = Json::array();
      for (int q = 0; q < z.rows(); ++q) {
        Json row = Json::array();
        for (int p = 0; p < z.cols(); ++p) row.push_back(z(q, p).get_str());
        rows.push_back(row);
      }
      out << Json{{"dims", rep.dims.values()}, {"matrix", rows}}.dump(2) << '\n';
    } else {
      out << render_matrix(z, rep.dims, format);
    }
  } else {
    throw UnknownObject("render --what must be one of lacing, pipedream, cgpd, zmatrix");
  }
  return 0;
}

int dispatch(const Options& o, std::ostream& out, std::istream& in) {
  if (o.command == "sweep") {
    if (!o.input.empty()) throw InvalidInput("sweep takes no input");
    SweepReport rep = sweep(o.budget);
    if (o.format == "json") {
      out << to_json(rep, o.letters ? Style::Letters : Style::Ascii, o.timings).dump(2) << '\n';
    } else {
      long failed = 0;
      for (const auto& r : rep.reports) {
        failed += !r.ok();
        out << (r.ok() ? "ok    " : "FAIL  ") << "dims";
        for (int v : r.r.dims().values()) out << ' ' << v;
        out << "  rank";
        for (int i = 0; i <= r.r.dims().n(); ++i)
          for (int j = i + 1; j <= r.r.dims().n(); ++j) out << ' ' << i << ',' << j << '=' << r.r.at(i, j);
        if (o.timings) {
          double ms = 0;
          for (const auto& res : r.results) ms += res.millis;
          out << "  [" << std::fixed << std::setprecision(1) << ms << " ms]";
        }
        out << '\n';
      }
      out << rep.reports.size() << " orbits, " << failed << " failed (budget " << o.budget << ")\n";
    }
    return rep.ok() ? 0 : 2;
  }

  Json input = read_input(o.input, in);
  if (o.command == "enum") return cmd_enum(o, input, out);
  if (o.command == "render") return cmd_render(o, input, out);

  RankArray r = orbit_from_json(input);
  if (o.command == "lace") {
    if (o.format == "json") {
      out << to_json(r).dump(2) << '\n';
    } else {
      Format f = format_of(o);
      out << "rank array\n" << render_table(r, f) << "lace array\n" << render_table(lace_array(r), f);
    }
  } else if (o.command == "zperm") {
    Permutation z = zelevinsky_permutation(r);
    if (o.format == "json")
      out << Json{{"z", z.one_line()}, {"length", z.length()}}.dump(2) << '\n';
    else
      out << to_string(z) << '\n';
  } else if (o.command == "qpoly") {
    print_poly(out, o, "qpoly", compute(r, Target::Qpoly, parse_method(o.method)));
  } else if (o.command == "csm") {
    Polynomial p = o.region == "full" ? csm_pd(r, Region::Full) : compute(r, Target::Csm, parse_method(o.method));
    print_poly(out, o, "csm", p);
  } else if (o.command == "check") {
    ConsistencyReport rep = check(r);
    if (o.format == "json")
      out << to_json(rep, o.letters ? Style::Letters : Style::Ascii, o.timings).dump(2) << '\n';
    else
      print_report(out, rep, o);
    return rep.ok() ? 0 : 2;
  }
  return 0;
}

void validate_flags(const Options& o, const CLI::App& app) {
  auto given = [&](const char* flag) { return app.get_option(flag)->count() > 0; };
  const std::string& c = o.command;
  if (given("--method") && c != "qpoly" && c != "csm")
    throw InvalidInput("--method applies only to qpoly and csm");
  if (given("--method")) parse_method(o.method);
  if (given("--region") && c != "csm" && c != "enum") throw InvalidInput("--region applies only to csm and enum");
  if (c == "csm" && o.region == "full" && o.method != "pd")
    throw InvalidInput("--region full requires --method pd");
  if (given("--what") && c != "enum" && c != "render") throw InvalidInput("--what applies only to enum and render");
  if ((c == "enum" || c == "render") && o.what.empty()) throw InvalidInput(c + " needs --what");
  if (given("--budget") && c != "sweep") throw InvalidInput("--budget applies only to sweep");
  if (o.budget < 0) throw InvalidInput("--budget must be nonnegative");
  if (o.timings && c != "check" && c != "sweep") throw InvalidInput("--timings applies only to check and sweep");
  if (o.count && c != "enum") throw InvalidInput("--count applies only to enum");
  if (o.format == "latex" && (c == "check" || c == "sweep" || c == "zperm"))
    throw InvalidInput("--format latex is not available for " + c);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Options o;
  CLI::App app{"Quiver polynomials and CSM classes of equioriented type A quiver loci", "qcalc"};
  app.add_option("command", o.command, "lace | zperm | qpoly | csm | enum | check | sweep | render")
      ->required()
      ->check(CLI::IsMember({"lace", "zperm", "qpoly", "csm", "enum", "check", "sweep", "render"}));
  app.add_option("input", o.input, "JSON file, inline JSON object, or - for stdin");
  app.add_option("--method", o.method, "pd | cgpd | ratio (default pd)");
  app.add_option("--what", o.what,
                 "enum: orbits | perm | rp | rpstar | p | cgpd | cgpd-min; render: lacing | pipedream | cgpd | zmatrix");
  app.add_option("--format", o.format, "text | latex | json")->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--region", o.region, "strict | full")->check(CLI::IsMember({"strict", "full"}));
  app.add_option("--budget", o.budget, "sweep: largest sum of r_i r_(i+1) (default 8)");
  app.add_flag("--letters", o.letters, "name alphabets a, b, c, ...");
  app.add_flag("--timings", o.timings, "include milliseconds in check/sweep output");
  app.add_flag("--count", o.count, "enum: print only the number of objects");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qcalc: " << e.what() << '\n';
    return 1;
  }
  try {
    validate_flags(o, app);
    return dispatch(o, out, in);
  } catch (const Error& e) {
    err << "qcalc: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "qcalc: internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace qcalc
