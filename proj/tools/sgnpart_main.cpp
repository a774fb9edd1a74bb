// Command-line front end: Stirling triangles, signed-partition enumeration,
// the balls-into-urns encode/decode, and the exhaustive verifiers.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
//             3 guard exceeded, 4 domain error.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgnpart/json_io.hpp"
#include "sgnpart/sgnpart.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitDomain = 4;

constexpr int kTableLimit = 64;
constexpr int kEnumerateLimit = 8;
constexpr std::uint64_t kBijectionGuard = 1000000;
constexpr std::uint64_t kBijectionForcedGuard = 1000000000;

void write_out(const std::string& text) {
  std::fwrite(text.data(), 1, text.size(), stdout);
}

sgnpart::triangle_kind kind_of(const std::string& type) {
  return type == "a" ? sgnpart::triangle_kind::type_a
                     : sgnpart::triangle_kind::type_b;
}

std::string table_text(sgnpart::triangle_kind kind, int max_n) {
  sgnpart::stirling_triangle t(kind);
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"n\\k"});
  for (int k = 0; k <= max_n; ++k) cells[0].push_back(std::to_string(k));
  for (int n = 0; n <= max_n; ++n) {
    std::vector<std::string> row = {std::to_string(n)};
    for (const auto& v : t.row(n)) row.push_back(v.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(static_cast<std::size_t>(max_n) + 2, 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out.append(widths[i] - row[i].size(), ' ');
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

int run_table(int max_n, const std::string& type, const std::string& format,
              bool force) {
  if (max_n > kTableLimit && !force) {
    std::fprintf(stderr,
                 "guard: --max-n %d exceeds the limit of %d (use --force)\n",
                 max_n, kTableLimit);
    return kExitGuard;
  }
  sgnpart::triangle_kind kind = kind_of(type);
  if (format == "csv")
    write_out(sgnpart::triangle_csv(kind, max_n));
  else if (format == "json")
    write_out(sgnpart::triangle_json(kind, max_n).dump() + "\n");
  else
    write_out(table_text(kind, max_n));
  return 0;
}

int run_enumerate(int n, std::optional<int> k, const std::string& format,
                  bool force) {
  if (n > kEnumerateLimit && !force) {
    std::fprintf(stderr,
                 "guard: --n %d exceeds the limit of %d (use --force)\n", n,
                 kEnumerateLimit);
    return kExitGuard;
  }
  std::string out;
  std::uint64_t count = 0;
  if (format == "json") {
    sgnpart::json lines = sgnpart::json::array();
    sgnpart::for_each_partition(n, k, [&](const sgnpart::signed_partition& p) {
      lines.push_back(sgnpart::to_json(p));
      ++count;
    });
    sgnpart::json j{{"n", n}};
    if (k) j["k"] = *k;
    j["count"] = count;
    j["partitions"] = std::move(lines);
    out = j.dump() + "\n";
  } else {
    sgnpart::for_each_partition(n, k, [&](const sgnpart::signed_partition& p) {
      out += sgnpart::format_partition(p);
      out += '\n';
      ++count;
    });
    out += "count=" + std::to_string(count) + "\n";
  }
  write_out(out);
  return 0;
}

int run_encode(const std::string& partition_text, const std::string& choices_text,
               int m, const std::string& format) {
  sgnpart::signed_partition p = sgnpart::parse_partition(partition_text);
  sgnpart::choice_sequence choices = sgnpart::parse_int_list(choices_text);
  sgnpart::urn_assignment f = sgnpart::encode(p, choices, m);
  if (format == "json")
    write_out(sgnpart::to_json(f).dump() + "\n");
  else
    write_out(sgnpart::format_int_list(f.urns) + "\n");
  return 0;
}

int run_decode(const std::string& assignment_text, int m,
               const std::string& format) {
  sgnpart::urn_assignment f;
  f.urns = sgnpart::parse_int_list(assignment_text);
  f.n = static_cast<int>(f.urns.size());
  f.m = m;
  sgnpart::decoded_assignment d = sgnpart::decode(f);
  if (format == "json") {
    write_out(sgnpart::to_json(d).dump() + "\n");
  } else {
    write_out(sgnpart::format_partition(d.partition) + "\n" +
              "choices=" + sgnpart::format_int_list(d.choices) + "\n");
  }
  return 0;
}

int run_verify_identity(int n, const std::string& type) {
  sgnpart::identity_report rep = kind_of(type) == sgnpart::triangle_kind::type_a
                                     ? sgnpart::verify_identity_A(n)
                                     : sgnpart::verify_identity_B(n);
  write_out(sgnpart::to_json(rep).dump() + "\n");
  return rep.equal ? 0 : kExitVerifyFailed;
}

int run_verify_bijection(int n, int m, std::uint64_t max_functions,
                         bool force) {
  if (force) max_functions = std::max(max_functions, kBijectionForcedGuard);
  sgnpart::bijection_report rep = sgnpart::verify_bijection(n, m, max_functions);
  write_out(sgnpart::to_json(rep).dump() + "\n");
  return rep.pass ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed partitions, type-B Stirling numbers and the "
               "balls-into-urns correspondence"};
  app.require_subcommand(1);

  int max_n = 6;
  int n = 0;
  int m = 0;
  std::optional<int> k_filter;
  std::string type = "b";
  std::string format = "text";
  std::string partition_text;
  std::string choices_text;
  std::string assignment_text;
  bool force = false;

  auto* table = app.add_subcommand("table", "Print a Stirling triangle");
  table->add_option("--max-n", max_n, "Largest row to print")->required();
  table->add_option("--type", type, "Triangle family: a or b")
      ->check(CLI::IsMember({"a", "b"}));
  table->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_flag("--force", force, "Ignore the row-count guard");

  auto* enumerate =
      app.add_subcommand("enumerate", "List all signed partitions of [±n]");
  enumerate->add_option("--n", n, "Ground-set half-size")->required();
  enumerate->add_option("--k", k_filter, "Only partitions with k pairs");
  enumerate->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  enumerate->add_flag("--force", force, "Ignore the size guard");

  auto* encode = app.add_subcommand(
      "encode", "Turn a partition plus urn choices into an assignment");
  encode->add_option("--partition", partition_text,
                     "Partition, e.g. \"z:[1];p:[[2,-3,5],[4,-6]]\"")
      ->required();
  encode->add_option("--choices", choices_text,
                     "Comma-separated urn choices, one per pair");
  encode->add_option("--m", m, "Number of urns (odd)")->required();
  encode->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* decode = app.add_subcommand(
      "decode", "Recover the partition and choices behind an assignment");
  decode->add_option("--assignment", assignment_text,
                     "Comma-separated urn per ball, e.g. \"1,4,5,7,4,2\"")
      ->required();
  decode->add_option("--m", m, "Number of urns (odd)")->required();
  decode->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the exhaustive checks");
  verify->require_subcommand(1);
  auto* identity =
      verify->add_subcommand("identity", "Power-sum identity, coefficient-wise");
  identity->add_option("--n", n, "Exponent to verify")->required();
  identity->add_option("--type", type, "Identity family: a or b")
      ->check(CLI::IsMember({"a", "b"}));
  auto* bijection = verify->add_subcommand(
      "bijection", "Exhaustive balls-into-urns bijectivity at (n, m)");
  std::uint64_t max_functions = kBijectionGuard;
  bijection->add_option("--n", n, "Number of balls")->required();
  bijection->add_option("--m", m, "Number of urns (odd)")->required();
  bijection->add_option("--max-functions", max_functions,
                        "Guard on the m^n functions to enumerate");
  bijection->add_flag("--force", force, "Raise the m^n guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (table->parsed()) return run_table(max_n, type, format, force);
    if (enumerate->parsed())
      return run_enumerate(n, k_filter, format, force);
    if (encode->parsed())
      return run_encode(partition_text, choices_text, m, format);
    if (decode->parsed()) return run_decode(assignment_text, m, format);
    if (verify->parsed()) {
      if (identity->parsed()) return run_verify_identity(n, type);
      if (bijection->parsed())
        return run_verify_bijection(n, m, max_functions, force);
    }
  } catch (const sgnpart::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == sgnpart::errc::guard_exceeded ? kExitGuard : kExitDomain;
  }
  return kExitUsage;
}
