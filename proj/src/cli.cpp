#include "asmxray/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "asmxray/bijection.hpp"
#include "asmxray/core.hpp"
#include "asmxray/enumerate.hpp"
#include "asmxray/json_io.hpp"
#include "asmxray/reconstruct.hpp"
#include "asmxray/verify.hpp"

namespace asmxray::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::optional<RenderStyle> parse_style(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s == "signs" ? RenderStyle::Signs : RenderStyle::Integers;
}

// One matrix per output record: a JSON line, or a rendered grid followed by a
// blank line when a style is requested.
void emit_matrix(std::ostream& out, const IntMatrix& m, std::optional<RenderStyle> style) {
  if (style)
    out << render_matrix(m, *style) << "\n\n";
  else
    out << dump_line(to_json(m)) << '\n';
}

DyckPath read_path(const std::string& text) {
  std::string_view view = text;
  while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
  if (!view.empty() && view.front() == '"') {
    const auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_string()) throw Error(ErrorCode::ParseError, "invalid JSON string");
    return parse_dyck_path(j.get<std::string>());
  }
  return parse_dyck_path(view);
}

struct Options {
  int n = 0;
  int max_n = 7;
  std::string format = "json";
  std::string style;
  std::string kind;
  std::string which;
  std::string xray_text;
  bool all = false;
  std::optional<std::size_t> limit;
};

void check_n(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.n > o.max_n)
    throw UsageError("--n " + std::to_string(o.n) + " exceeds the cap of " + std::to_string(o.max_n) +
                     " (raise it with --max-n)");
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  check_n(o);
  const auto style = parse_style(o.style);
  const bool count_only = o.format == "count";
  std::uint64_t count = 0;

  if (o.kind == "dyck") {
    DyckPathStream paths(o.n);
    while (auto p = paths.next()) {
      ++count;
      if (!count_only) out << dump_line(to_json(*p)) << '\n';
    }
  } else if (o.kind == "determined") {
    for (const Asm& a : determined_asms(o.n)) {
      ++count;
      if (!count_only) emit_matrix(out, a.matrix(), style);
    }
  } else {
    AsmStream stream(o.n, o.kind == "dsasm");
    while (auto a = stream.next()) {
      ++count;
      if (!count_only) emit_matrix(out, a->matrix(), style);
    }
  }
  if (count_only) out << count << '\n';
  return kExitOk;
}

int cmd_xray(std::istream& in, std::ostream& out) {
  out << render_xray(xray(parse_asm_json(read_all(in)))) << '\n';
  return kExitOk;
}

int cmd_map(const Options& o, std::istream& in, std::ostream& out) {
  const std::string input = read_all(in);
  const auto style = parse_style(o.style);
  if (o.which == "a") {
    emit_matrix(out, map_a(read_path(input)).matrix(), style);
  } else if (o.which == "m") {
    emit_matrix(out, map_m(parse_asm_json(input)).matrix(), style);
  } else if (o.which == "inverse-a") {
    out << dump_line(to_json(inverse_a(parse_asm_json(input)))) << '\n';
  } else {
    out << dump_line(to_json(shadow_path(parse_asm_json(input)))) << '\n';
  }
  return kExitOk;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  if (o.all && o.limit) throw UsageError("--all and --limit are mutually exclusive");
  if (o.limit && *o.limit == 0) throw UsageError("--limit must be positive");
  const XRay x = parse_xray(o.xray_text);
  Options capped = o;
  capped.n = x.size();
  check_n(capped);
  const auto style = parse_style(o.style);
  for (const Asm& a : find_asms_with_xray(x, o.limit)) emit_matrix(out, a.matrix(), style);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  check_n(o);
  const VerificationResult result = verify(o.n);
  nlohmann::json j = to_json(result.report);
  j["checks"] = result.checks;
  j["ok"] = result.ok();
  out << j.dump(2) << '\n';
  return result.ok() ? kExitOk : 1;
}

int cmd_histogram(const Options& o, std::ostream& out) {
  check_n(o);
  out << histogram_csv(xray_histogram(o.n));
  return kExitOk;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  const Asm a = parse_asm_json(read_all(in));
  out << render_asm(a, parse_style(o.style).value_or(RenderStyle::Signs)) << '\n';
  return kExitOk;
}

int cmd_multiplicity(const Options& o, std::istream& in, std::ostream& out) {
  const Asm a = parse_asm_json(read_all(in));
  Options capped = o;
  capped.n = a.size();
  check_n(capped);
  out << find_asms_with_xray(xray(a)).size() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating sign matrices, Dyck paths and antidiagonal X-rays"};
  app.name(args.empty() ? "asmxray" : args.front());
  app.require_subcommand(1);
  Options o;

  auto add_n = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "Matrix size / path semilength")->required();
    sub->add_option("--max-n", o.max_n, "Largest n accepted")->capture_default_str();
  };
  auto add_style = [&o](CLI::App* sub) {
    sub->add_option("--style", o.style, "Print matrices as text grids instead of JSON")
        ->check(CLI::IsMember({"signs", "integers"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "Stream all objects of a kind");
  enumerate->add_option("kind", o.kind, "asm | dsasm | dyck | determined")
      ->required()
      ->check(CLI::IsMember({"asm", "dsasm", "dyck", "determined"}));
  add_n(enumerate);
  enumerate->add_option("--format", o.format, "json | count")
      ->check(CLI::IsMember({"json", "count"}))
      ->capture_default_str();
  add_style(enumerate);

  auto* xray_cmd = app.add_subcommand("xray", "Print the X-ray of a matrix read from stdin");

  auto* map = app.add_subcommand("map", "Apply a map to a path or matrix read from stdin");
  map->add_option("which", o.which, "a | m | inverse-a | shadow")
      ->required()
      ->check(CLI::IsMember({"a", "m", "inverse-a", "shadow"}));
  add_style(map);

  auto* reconstruct = app.add_subcommand("reconstruct", "List the matrices with a given X-ray");
  reconstruct->add_option("xray", o.xray_text, "Slash-separated sums, e.g. 0/2/-1/2/0")->required();
  reconstruct->add_flag("--all", o.all, "Return every matrix (default)");
  reconstruct->add_option("--limit", o.limit, "Stop after K matrices");
  reconstruct->add_option("--max-n", o.max_n, "Largest n accepted")->capture_default_str();
  add_style(reconstruct);

  auto* verify_cmd = app.add_subcommand("verify", "Check the correspondence exhaustively for one n");
  add_n(verify_cmd);

  auto* histogram = app.add_subcommand("histogram", "X-ray histogram as CSV");
  add_n(histogram);

  auto* render = app.add_subcommand("render", "Render a matrix read from stdin");
  add_style(render);

  auto* mult = app.add_subcommand("multiplicity", "Number of ASMs sharing the X-ray of a matrix from stdin");
  mult->add_option("--max-n", o.max_n, "Largest n accepted")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("asmxray");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (xray_cmd->parsed()) return cmd_xray(in, out);
    if (map->parsed()) return cmd_map(o, in, out);
    if (reconstruct->parsed()) return cmd_reconstruct(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (histogram->parsed()) return cmd_histogram(o, out);
    if (render->parsed()) return cmd_render(o, in, out);
    if (mult->parsed()) return cmd_multiplicity(o, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace asmxray::cli
