#include "specht/cli.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "specht/errors.hpp"
#include "specht/hilbert.hpp"
#include "specht/parse.hpp"
#include "specht/specht.hpp"
#include "specht/verify.hpp"

namespace specht {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFamily = 3;
constexpr int kExitCap = 4;

Partition parse_shape(const std::string& lambda, int n_flag) {
  Partition shape = Partition::parse(lambda);
  if (n_flag > 0 && n_flag != shape.n())
    throw DomainError("--n is " + std::to_string(n_flag) +
                      " but the shape has size " + std::to_string(shape.n()));
  return shape;
}

/// Largest variable index mentioned as x<k>; the ambient of a pasted ideal.
int infer_ambient(const std::string& text) {
  int best = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1])))
      continue;
    std::size_t j = i + 1;
    long v = 0;
    while (j < text.size() && j - i <= 9 &&
           std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + (text[j] - '0');
      ++j;
    }
    best = std::max(best, static_cast<int>(v));
    i = j - 1;
  }
  if (best == 0)
    throw DomainError("cannot infer the variable count; pass --n");
  return best;
}

/// Splits "(p1, p2, ...)" on top-level commas. "()" is the empty list.
std::vector<std::string> split_paren_list(const std::string& text) {
  const std::size_t a = text.find_first_not_of(" \t\r\n");
  const std::size_t b = text.find_last_not_of(" \t\r\n");
  if (a == std::string::npos || text[a] != '(' || text[b] != ')')
    throw ParseError("ideal input must be a parenthesized polynomial list",
                     a == std::string::npos ? 0 : a);
  const std::string inner = text.substr(a + 1, b - a - 1);
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!parts.empty() || cur.find_first_not_of(" \t\r\n") != std::string::npos)
    parts.push_back(cur);
  return parts;
}

struct GenOptions {
  std::string lambda;
  int n = 0;
  std::string field = "q";
  std::string format = "text";
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  Partition shape = parse_shape(o.lambda, o.n);
  const int n = shape.n();
  const Field K = Field::parse(o.field);
  const MonomialOrder order = MonomialOrder::default_lex(n);
  auto tabs = enumerate_standard_tableaux(shape);

  if (o.format == "json") {
    nlohmann::json j;
    j["ambient"] = n;
    j["field"] = K.str();
    j["lambda"] = shape.str();
    j["order"] = order.str();
    auto arr = nlohmann::json::array();
    for (const auto& T : tabs) {
      nlohmann::json g;
      g["tableau"] = nlohmann::json::parse(T.json_text());
      g["polynomial"] = specht_polynomial(T, n, K, order).str();
      arr.push_back(g);
    }
    j["generators"] = arr;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& T : tabs)
      out << T.json_text() << "  "
          << specht_polynomial(T, n, K, order).str() << "\n";
  }
  return kExitOk;
}

struct HilbertOptions {
  std::string lambda;
  int n = 0;
  std::string field = "q";
  std::string method = "both";
  std::string format = "text";
};

HilbertSeries closed_series_of(const SpechtIdealSpec& spec) {
  switch (spec.family) {
    case SpechtFamily::TwoRow:
      // A single row generates the unit ideal; the quotient is zero.
      return spec.d == 0 ? HilbertSeries::zero()
                         : closed_form_two_row(spec.n, spec.d);
    case SpechtFamily::HookTwoRow:
      return closed_form_hook(spec.d);
    default:
      throw FamilyError("no closed-form series for the " +
                        family_name(spec.family) + " family");
  }
}

int cmd_hilbert(const HilbertOptions& o, std::ostream& out) {
  Partition shape = parse_shape(o.lambda, o.n);
  const SpechtIdealSpec spec = SpechtIdealSpec::of(shape);
  const Field K = Field::parse(o.field);

  const bool want_closed = o.method != "groebner";
  const bool want_gb = o.method != "closed-form";

  HilbertSeries closed = HilbertSeries::zero();
  HilbertSeries gb = HilbertSeries::zero();
  if (want_closed) closed = closed_series_of(spec);
  if (want_gb) gb = series_of_quotient(specht_ideal(spec, K));
  const bool match = !(want_closed && want_gb) || closed == gb;

  if (o.format == "json") {
    nlohmann::json j;
    j["field"] = K.str();
    j["lambda"] = shape.str();
    j["method"] = o.method;
    j["n"] = spec.n;
    nlohmann::json series;
    if (want_closed)
      series["closed-form"] = nlohmann::json::parse(closed.json_text());
    if (want_gb) series["groebner"] = nlohmann::json::parse(gb.json_text());
    j["series"] = series;
    if (want_closed && want_gb) j["match"] = match;
    out << j.dump(2) << "\n";
  } else if (want_closed && want_gb) {
    out << "closed-form: " << closed.str() << "\n";
    out << "groebner: " << gb.str() << "\n";
    out << "match: " << (match ? "yes" : "no") << "\n";
  } else {
    out << (want_closed ? closed : gb).str() << "\n";
  }
  return match ? kExitOk : kExitVerification;
}

struct GbOptions {
  std::string lambda;
  int n = 0;
  std::string field = "q";
  std::string format = "text";
};

int cmd_gb(const GbOptions& o, std::ostream& out, std::istream& in) {
  Ideal I = [&]() {
    if (!o.lambda.empty()) {
      Partition shape = parse_shape(o.lambda, o.n);
      return specht_ideal(SpechtIdealSpec::of(shape),
                          Field::parse(o.field));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
      throw DomainError("no ideal on stdin and no --lambda");
    if (text[first] == '{') return ideal_from_json_text(text);
    const Field K = Field::parse(o.field);
    const int n = o.n > 0 ? o.n : infer_ambient(text);
    const MonomialOrder order = MonomialOrder::default_lex(n);
    std::vector<Polynomial> gens;
    for (const auto& piece : split_paren_list(text))
      gens.push_back(parse_polynomial(piece, n, K, order));
    return Ideal(std::move(gens), n, K, order);
  }();

  const GroebnerBasis& G = I.groebner();
  if (o.format == "json") {
    out << gb_to_json_text(G, I.field()) << "\n";
  } else {
    out << "order " << G.order().str() << "\n";
    for (const auto& g : G.elements())
      out << "[" << g.leading_monomial().str() << "] " << g.str() << "\n";
  }
  return kExitOk;
}

struct VerifyCliOptions {
  std::string suite;
  int max_n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  int trials = 200;
  std::string format = "text";
};

int cmd_verify(const VerifyCliOptions& o, std::ostream& out) {
  VerifyOptions vo;
  vo.max_n = o.max_n;
  vo.d = o.d;
  vo.seed = o.seed;
  vo.trials = o.trials;
  VerificationReport rep = run_verification_suite(o.suite, vo);
  if (o.format == "json")
    out << rep.json_text() << "\n";
  else
    out << rep.text();
  return rep.pass() ? kExitOk : kExitVerification;
}

struct SytCountOptions {
  std::string lambda;
  int n = 0;
  std::string format = "text";
};

int cmd_syt_count(const SytCountOptions& o, std::ostream& out) {
  Partition shape = parse_shape(o.lambda, o.n);
  mpz_class count = count_syt_hook(shape);
  if (o.format == "json") {
    nlohmann::json j;
    if (count.fits_slong_p())
      j["count"] = static_cast<long>(count.get_si());
    else
      j["count"] = count.get_str();
    j["lambda"] = shape.str();
    j["n"] = shape.n();
    out << j.dump(2) << "\n";
  } else {
    out << count.get_str() << "\n";
  }
  return kExitOk;
}

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in) {
  CLI::App app{
      "Specht ideals: generators, Groebner bases, Hilbert series, and "
      "verification suites"};
  app.name("specht");
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand(
      "gen", "Print the standard-tableau generators of the Specht ideal");
  gen->add_option("--lambda", gen_opt.lambda, "partition, e.g. 3,2,1")
      ->required();
  gen->add_option("--n", gen_opt.n, "ambient variables (defaults to |lambda|)");
  gen->add_option("--field", gen_opt.field, "q or fp:<p>")
      ->capture_default_str();
  add_format_option(gen, gen_opt.format);

  HilbertOptions hil_opt;
  CLI::App* hil = app.add_subcommand(
      "hilbert", "Hilbert series of the quotient by the Specht ideal");
  hil->add_option("--lambda", hil_opt.lambda, "partition, e.g. 4,2")
      ->required();
  hil->add_option("--n", hil_opt.n, "ambient variables (defaults to |lambda|)");
  hil->add_option("--field", hil_opt.field, "q or fp:<p>")
      ->capture_default_str();
  hil->add_option("--method", hil_opt.method,
                  "closed-form, groebner, or both (compares them)")
      ->check(CLI::IsMember({"closed-form", "groebner", "both"}))
      ->capture_default_str();
  add_format_option(hil, hil_opt.format);

  GbOptions gb_opt;
  CLI::App* gb = app.add_subcommand(
      "gb",
      "Reduced Groebner basis of a Specht ideal (--lambda) or of an ideal "
      "read from stdin: \"(p1, p2, ...)\" or the JSON ideal format");
  gb->add_option("--lambda", gb_opt.lambda, "partition, e.g. 2,2");
  gb->add_option("--n", gb_opt.n,
                 "ambient variables (defaults to the largest index seen)");
  gb->add_option("--field", gb_opt.field, "q or fp:<p>")
      ->capture_default_str();
  add_format_option(gb, gb_opt.format);

  VerifyCliOptions ver_opt;
  CLI::App* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", ver_opt.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(verification_suites()));
  ver->add_option("--max-n", ver_opt.max_n,
                  "largest ambient size (0 = suite default)");
  ver->add_option("--d", ver_opt.d, "restrict to one d (0 = suite default)");
  ver->add_option("--seed", ver_opt.seed, "RNG seed for sampled checks")
      ->capture_default_str();
  ver->add_option("--trials", ver_opt.trials, "trials per sampled case")
      ->capture_default_str();
  add_format_option(ver, ver_opt.format);

  SytCountOptions syt_opt;
  CLI::App* syt = app.add_subcommand(
      "syt-count", "Number of standard tableaux (hook length formula)");
  syt->add_option("--lambda", syt_opt.lambda, "partition, e.g. 3,3,1")
      ->required();
  syt->add_option("--n", syt_opt.n, "size check (defaults to |lambda|)");
  add_format_option(syt, syt_opt.format);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("specht");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_opt, out);
    if (hil->parsed()) return cmd_hilbert(hil_opt, out);
    if (gb->parsed()) return cmd_gb(gb_opt, out, in);
    if (ver->parsed()) return cmd_verify(ver_opt, out);
    if (syt->parsed()) return cmd_syt_count(syt_opt, out);
  } catch (const DegreeCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const FamilyError& e) {
    err << "unsupported family: " << e.what() << "\n";
    return kExitFamily;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace specht
