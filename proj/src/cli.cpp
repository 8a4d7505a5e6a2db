#include "kummer/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kummer/carries.hpp"
#include "kummer/digits.hpp"
#include "kummer/error.hpp"
#include "kummer/kernels.hpp"
#include "kummer/primes.hpp"
#include "kummer/render.hpp"
#include "kummer/triangle.hpp"
#include "kummer/valuation.hpp"
#include "kummer/verify.hpp"

namespace kummer {

namespace {

using nlohmann::json;

struct GlobalFlags {
  bool json = false;
  natural input_base = 10;
  std::optional<natural> oracle_cap;
};

natural number_arg(const std::string& text, const GlobalFlags& g)
{
  return parse_natural(text, g.input_base);
}

std::string digit_token(natural d, natural base)
{
  if (base <= 36) return std::string(1, "0123456789abcdefghijklmnopqrstuvwxyz"[d]);
  return std::to_string(d);
}

std::string place_list(const std::vector<std::size_t>& places)
{
  std::string out = "{";
  for (std::size_t k = 0; k < places.size(); ++k) {
    if (k != 0) out += ", ";
    out += std::to_string(places[k]);
  }
  return out + "}";
}

// Column-addition diagram, most significant column on the left.
std::string trace_diagram(const CarryTrace& t)
{
  const std::size_t cols = t.columns.size();
  std::size_t width = 1;
  for (const CarryColumn& c : t.columns) {
    width = std::max({width, digit_token(c.i_digit, t.base).size(), digit_token(c.j_digit, t.base).size(),
                      digit_token(c.n_digit, t.base).size()});
  }
  auto cell = [&](const std::string& s) { return std::string(width + 1 - s.size(), ' ') + s; };
  auto line = [&](const std::string& label, auto&& token) {
    std::string out = label;
    for (std::size_t k = cols; k-- > 0;) out += cell(token(k));
    return out + "\n";
  };
  auto digits_or_blank = [&](const DigitVector& d, std::size_t k) {
    return k < d.size() || (k == 0 && d.is_zero() && cols > 0) ? digit_token(d[k], t.base) : std::string(" ");
  };

  std::string out;
  out += line("carry  ", [&](std::size_t k) { return std::string(t.columns[k].carry_in ? "1" : " "); });
  out += line("  i    ", [&](std::size_t k) { return digits_or_blank(t.addend_i, k); });
  out += line("+ j    ", [&](std::size_t k) { return digits_or_blank(t.addend_j, k); });
  out += "       " + std::string(cols * (width + 1), '-') + "\n";
  out += line("= n    ", [&](std::size_t k) { return digits_or_blank(t.sum_n, k); });
  out += line("stop   ", [&](std::size_t k) { return std::string(t.columns[k].stopping ? "*" : " "); });
  return out;
}

std::string digit_formula_line(natural i, natural j, natural b)
{
  const natural I = digit_sum(i, b), J = digit_sum(j, b), N = digit_sum(i + j, b);
  const natural c = carry_count_digit_formula(i, j, b);
  return "c = (I+J-N)/(b-1) = (" + std::to_string(I) + "+" + std::to_string(J) + "-" + std::to_string(N) + ")/" +
         std::to_string(b - 1) + " = " + std::to_string(c);
}

json trace_json(const CarryTrace& t, natural i, natural j)
{
  std::vector<bool> cin, cout, stop;
  for (const CarryColumn& c : t.columns) {
    cin.push_back(c.carry_in);
    cout.push_back(c.carry_out);
    stop.push_back(c.stopping);
  }
  auto digits = [](const DigitVector& d) { return std::vector<natural>(d.digits().begin(), d.digits().end()); };
  return json{{"base", t.base},
              {"i", i},
              {"j", j},
              {"n", i + j},
              {"addend_i", digits(t.addend_i)},
              {"addend_j", digits(t.addend_j)},
              {"sum_n", digits(t.sum_n)},
              {"sum_display", t.sum_n.display()},
              {"carry_in", cin},
              {"carry_out", cout},
              {"stopping", stop},
              {"stopping_places", stopping_places(t)},
              {"carry_count", t.carry_count}};
}

void run_digits(const std::string& n_text, natural base, const GlobalFlags& g, std::ostream& out)
{
  const natural n = number_arg(n_text, g);
  const DigitVector d = to_digits(n, base);
  const natural sum = digit_sum(n, base);
  if (g.json) {
    out << json{{"base", base},
                {"digits", std::vector<natural>(d.digits().begin(), d.digits().end())},
                {"display", d.display()},
                {"digit_sum", sum}}
             .dump()
        << "\n";
    return;
  }
  out << d.display() << "\n";
  out << "digits (little-endian): [";
  for (std::size_t k = 0; k < d.size(); ++k) out << (k ? ", " : "") << d.digits()[k];
  out << "]\n";
  out << "digit sum: " << sum << "\n";
}

void run_add(const std::string& i_text, const std::string& j_text, natural base, bool trace, const GlobalFlags& g,
             std::ostream& out)
{
  const natural i = number_arg(i_text, g);
  const natural j = number_arg(j_text, g);
  const CarryTrace t = add_with_trace(i, j, base);
  const natural formula = carry_count_digit_formula(i, j, base);
  if (formula != t.carry_count) {
    throw TheoremViolation("digit-sum carry formula gives " + std::to_string(formula) + " but the addition carried " +
                           std::to_string(t.carry_count) + " times");
  }
  if (g.json) {
    json j_out = trace_json(t, i, j);
    j_out["digit_formula"] = {{"I", digit_sum(i, base)},
                              {"J", digit_sum(j, base)},
                              {"N", digit_sum(i + j, base)},
                              {"carries", formula}};
    out << j_out.dump() << "\n";
    return;
  }
  out << to_digits(i, base).display() << " + " << to_digits(j, base).display() << " = " << t.sum_n.display() << "\n";
  out << "decimal: " << i << " + " << j << " = " << i + j << "\n";
  out << "carries: " << t.carry_count << "\n";
  if (trace) {
    out << trace_diagram(t);
    out << "stopping places: " << place_list(stopping_places(t)) << "\n";
    out << digit_formula_line(i, j, base) << "\n";
  }
}

int run_factorial(const std::string& n_text, natural p, const std::string& method, const GlobalFlags& g,
                  std::ostream& out)
{
  const natural n = number_arg(n_text, g);
  require_prime(p);
  const natural cap = resolve_oracle_cap(g.oracle_cap);
  json result{{"n", n}, {"prime", p}, {"method", method}};
  std::ostringstream text;
  const std::string label = "v_" + std::to_string(p) + "(" + std::to_string(n) + "!)";
  std::vector<natural> values;
  auto record = [&](const char* key, const char* name, natural v) {
    result[key] = v;
    values.push_back(v);
    text << label << " by " << name << ": " << v << "\n";
  };
  if (method == "brute" || method == "all") record("brute", "brute force", factorial_valuation_bruteforce(n, p, cap));
  if (method == "legendre" || method == "all") record("legendre", "Legendre's formula", legendre_valuation(n, p));
  if (method == "digits" || method == "all") record("digits", "digit sum (n - S_p(n))/(p-1)", digit_sum_valuation(n, p));
  if (values.empty()) throw InvalidArgument("unknown method '" + method + "' (expected brute, legendre, digits, all)");

  const bool agree = std::all_of(values.begin(), values.end(), [&](natural v) { return v == values.front(); });
  if (values.size() > 1) {
    result["agree"] = agree;
    text << (agree ? "all three methods agree: " + std::to_string(values.front()) : std::string("METHODS DISAGREE"))
         << "\n";
  }
  out << (g.json ? result.dump() + "\n" : text.str());
  return agree ? kExitOk : kExitViolation;
}

int run_binomial(const std::string& n_text, const std::string& i_text, natural p, const GlobalFlags& g,
                 std::ostream& out)
{
  const natural n = number_arg(n_text, g);
  const natural i = number_arg(i_text, g);
  const natural carries = kummer_valuation(n, i, p);
  const natural vn = legendre_valuation(n, p), vi = legendre_valuation(i, p), vj = legendre_valuation(n - i, p);
  const natural difference = legendre_binomial_valuation(n, i, p);
  const CarryTrace t = add_with_trace(i, n - i, p);
  const bool agree = carries == difference;
  if (g.json) {
    out << json{{"n", n},
                {"i", i},
                {"j", n - i},
                {"prime", p},
                {"carry_count", carries},
                {"legendre", {{"n_factorial", vn}, {"i_factorial", vi}, {"j_factorial", vj}, {"difference", difference}}},
                {"agree", agree},
                {"trace", trace_json(t, i, n - i)}}
             .dump()
        << "\n";
  } else {
    const std::string label = "v_" + std::to_string(p) + "(C(" + std::to_string(n) + "," + std::to_string(i) + "))";
    out << label << " by carry count: " << carries << "\n";
    out << label << " by Legendre difference: " << vn << " - " << vi << " - " << vj << " = " << difference << "\n";
    out << "base-" << p << " addition " << to_digits(i, p).display() << " + " << to_digits(n - i, p).display() << ":\n";
    out << trace_diagram(t);
    out << (agree ? "carry count and Legendre difference agree\n" : "MISMATCH between carry count and Legendre\n");
  }
  return agree ? kExitOk : kExitViolation;
}

void run_divisible(const std::string& n_text, const std::string& i_text, natural m, const GlobalFlags& g,
                   std::ostream& out)
{
  const natural n = number_arg(n_text, g);
  const natural i = number_arg(i_text, g);
  const DivisibilityVerdict v = divisibility_verdict(n, i, m);
  if (g.json) {
    json factors = json::array();
    for (const auto& f : v.factors) {
      factors.push_back({{"prime", f.prime}, {"exponent", f.exponent}, {"valuation", f.valuation}, {"satisfied", f.satisfied}});
    }
    out << json{{"n", n}, {"i", i}, {"modulus", m}, {"factors", factors}, {"divisible", v.divisible}}.dump() << "\n";
    return;
  }
  out << "does " << m << " divide C(" << n << "," << i << ")?\n";
  for (const auto& f : v.factors) {
    out << "  " << f.prime << "^" << f.exponent << ": v_" << f.prime << " = " << f.valuation << (f.satisfied ? " >= " : " < ")
        << f.exponent << "  " << (f.satisfied ? "yes" : "no") << "\n";
  }
  out << "divisible: " << (v.divisible ? "true" : "false") << "\n";
}

DivisibilityMask mask_for(natural m, natural rows, const std::string& method_text)
{
  const MaskMethod method = parse_mask_method(method_text);
  if (is_prime(m)) return divisibility_mask(m, rows, method);
  switch (method) {
  case MaskMethod::recurrence:
    return recurrence_mask(m, rows);
  case MaskMethod::kummer:
    return factored_kummer_mask(m, rows);
  default:
    throw InvalidArgument("method " + method_text + " needs a prime modulus; use recurrence or kummer for m = " +
                          std::to_string(m));
  }
}

void run_triangle(natural m, natural rows, const std::string& method_text, const std::string& format_text,
                  const GlobalFlags& g, std::ostream& out)
{
  const MaskMethod method = parse_mask_method(method_text);
  RenderSpec spec;
  spec.alignment = Alignment::centered;
  spec.format = g.json ? ImageFormat::json : parse_image_format(format_text);
  if (spec.format != ImageFormat::ascii && spec.format != ImageFormat::json) {
    throw InvalidArgument("triangle prints ascii or json; use `render` for images");
  }
  if (method == MaskMethod::kummer) {
    // Carry counts only decide divisibility, so this method prints the mask.
    out << render_mask(mask_for(m, rows, method_text), spec);
    return;
  }
  if (method == MaskMethod::digit_domination) {
    require_prime(m, "modulus");
    if (rows < 1) throw InvalidArgument("row count must be at least 1");
    std::vector<TriangleRow> out_rows;
    for (natural n = 0; n < rows; ++n) {
      std::vector<natural> entries(n + 1);
      for (natural i = 0; i <= n; ++i) entries[i] = entry_mod_prime(n, i, m);
      out_rows.emplace_back(m, n, entries);
    }
    out << render_residues(out_rows, spec);
    return;
  }
  out << render_residues(generate_rows(m, rows), spec);
}

struct ImageArgs {
  std::string format = "pbm";
  bool centered = false;
  unsigned scale = 1;
  bool binary = false;
  std::string out_path;

  RenderSpec spec(const GlobalFlags& g) const
  {
    RenderSpec s;
    s.format = g.json ? ImageFormat::json : parse_image_format(format);
    s.alignment = centered ? Alignment::centered : Alignment::left;
    s.scale = scale;
    s.binary_pbm = binary;
    if (!out_path.empty()) s.destination = std::filesystem::path(out_path);
    return s;
  }
};

void add_image_flags(CLI::App* cmd, ImageArgs& a, const std::string& formats)
{
  cmd->add_option("--format", a.format, "Output format: " + formats)->capture_default_str();
  cmd->add_flag("--centered", a.centered, "Center rows (width 2R-1) instead of left-aligning them");
  cmd->add_option("--scale", a.scale, "Replicate each cell into a k x k pixel block")->capture_default_str();
  cmd->add_flag("--binary", a.binary, "Emit binary P4 instead of plain P1 for pbm");
  cmd->add_option("--out", a.out_path, "Write to this file instead of standard output");
}

} // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Base-b digits, carries, Kummer valuations and Pascal's triangle mod m"};
  app.name("kummer");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--input-base", g.input_base, "Read positional numbers in this base (2..36)")->capture_default_str();
  app.add_option("--oracle-cap", g.oracle_cap, "Brute-force oracle cap (default: $KUMMER_ORACLE_CAP or 100000)");

  // digits
  std::string digits_n;
  natural digits_base = 10;
  auto* digits = app.add_subcommand("digits", "Base-b digits and digit sum of n");
  digits->add_option("n", digits_n, "Natural number")->required();
  digits->add_option("--base,-b", digits_base, "Target base (>= 2)")->required();

  // add
  std::string add_i, add_j;
  natural add_base = 10;
  bool add_trace = false;
  auto* add = app.add_subcommand("add", "Column addition with carry bookkeeping");
  add->add_option("i", add_i)->required();
  add->add_option("j", add_j)->required();
  add->add_option("--base,-b", add_base, "Base for the addition (>= 2)")->required();
  add->add_flag("--trace", add_trace, "Print the column diagram and the digit-sum carry formula");

  // valuation factorial / binomial
  auto* valuation = app.add_subcommand("valuation", "p-adic valuations");
  valuation->require_subcommand(1);
  std::string fact_n, fact_method = "all";
  natural fact_p = 2;
  auto* factorial = valuation->add_subcommand("factorial", "v_p(n!) by brute force, Legendre, digit sum");
  factorial->add_option("n", fact_n)->required();
  factorial->add_option("--prime,-p", fact_p)->required();
  factorial->add_option("--method", fact_method, "brute|legendre|digits|all")->capture_default_str();

  std::string bin_n, bin_i;
  natural bin_p = 2;
  auto* binomial = valuation->add_subcommand("binomial", "v_p(C(n,i)) by carry count and Legendre difference");
  binomial->add_option("n", bin_n)->required();
  binomial->add_option("i", bin_i)->required();
  binomial->add_option("--prime,-p", bin_p)->required();

  // divisible
  std::string div_n, div_i;
  natural div_m = 2;
  auto* divisible = app.add_subcommand("divisible", "Does m divide C(n,i)? Per-prime-power verdicts");
  divisible->add_option("n", div_n)->required();
  divisible->add_option("i", div_i)->required();
  divisible->add_option("--mod,-m", div_m)->required();

  // triangle
  natural tri_m = 2, tri_rows = 16;
  std::string tri_method = "recurrence", tri_format = "ascii";
  auto* triangle = app.add_subcommand("triangle", "Rows of Pascal's triangle mod m");
  triangle->add_option("--mod,-m", tri_m)->required();
  triangle->add_option("--rows,-r", tri_rows)->required();
  triangle->add_option("--method", tri_method, "recurrence|kummer|lucas")->capture_default_str();
  triangle->add_option("--format", tri_format, "ascii|json")->capture_default_str();

  // render
  natural ren_m = 2, ren_rows = 32;
  std::string ren_method = "recurrence";
  ImageArgs ren_image;
  auto* render = app.add_subcommand("render", "Divisibility mask (pbm/ascii/json) or residues (pgm/ppm)");
  render->add_option("--mod,-m", ren_m)->required();
  render->add_option("--rows,-r", ren_rows)->required();
  render->add_option("--method", ren_method, "recurrence|kummer|digit-domination|lucas (masks)")->capture_default_str();
  add_image_flags(render, ren_image, "pbm|pgm|ppm|ascii|json");

  // stripes
  natural str_place = 1, str_rows = 32;
  std::string str_layers = "intersection";
  ImageArgs str_image;
  auto* stripes = app.add_subcommand("stripes", "Binary stripe layers that eliminate special cells at a place");
  stripes->add_option("--place,-k", str_place)->required();
  stripes->add_option("--rows,-r", str_rows)->required();
  stripes->add_option("--layers", str_layers, "Comma list of row,i,j,intersection")->capture_default_str();
  add_image_flags(stripes, str_image, "pbm|pgm|ppm|ascii|json");

  // verify
  VerifyOptions vopt;
  std::vector<natural> verify_primes;
  bool verify_timing = false;
  auto* verify = app.add_subcommand("verify", "Run every cross-method property sweep");
  verify->add_option("--max-n", vopt.max_n, "Largest n in the n-indexed sweeps")->capture_default_str();
  verify->add_option("--primes", verify_primes, "Primes to sweep (comma separated)")->delimiter(',');
  verify->add_option("--rows", vopt.rows, "Rows for mask sweeps")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Seed for the randomized sweeps")->capture_default_str();
  verify->add_option("--threads", vopt.threads, "Worker threads (0 = all cores)")->capture_default_str();
  verify->add_flag("--timing", verify_timing, "Include elapsed times (makes output nondeterministic)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << "run `kummer --help` for usage\n";
    return kExitUsage;
  }

  try {
    if (*digits) {
      run_digits(digits_n, digits_base, g, out);
    } else if (*add) {
      run_add(add_i, add_j, add_base, add_trace, g, out);
    } else if (*factorial) {
      return run_factorial(fact_n, fact_p, fact_method, g, out);
    } else if (*binomial) {
      return run_binomial(bin_n, bin_i, bin_p, g, out);
    } else if (*divisible) {
      run_divisible(div_n, div_i, div_m, g, out);
    } else if (*triangle) {
      run_triangle(tri_m, tri_rows, tri_method, tri_format, g, out);
    } else if (*render) {
      const RenderSpec spec = ren_image.spec(g);
      std::string bytes;
      if (spec.format == ImageFormat::pgm || spec.format == ImageFormat::ppm) {
        bytes = render_residues(generate_rows(ren_m, ren_rows), spec);
      } else {
        bytes = render_mask(mask_for(ren_m, ren_rows, ren_method), spec);
      }
      write_output(bytes, spec, out);
    } else if (*stripes) {
      const RenderSpec spec = str_image.spec(g);
      write_output(render_stripes(str_place, str_rows, parse_stripe_layers(str_layers), spec), spec, out);
    } else if (*verify) {
      if (!verify_primes.empty()) vopt.primes = verify_primes;
      vopt.oracle_cap = resolve_oracle_cap(g.oracle_cap);
      const VerifyReport report = run_verify(vopt);
      out << (g.json ? report.to_json(verify_timing) : report.to_text(verify_timing));
      return report.passed() ? kExitOk : kExitViolation;
    }
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

} // namespace kummer
