// dmagic - range lcm, radix conversion, and D-magic number toolkit.
//
// Exit codes: 0 success (and "verified true" for verify/check-oeis),
// 1 verified false / mismatches found, 2 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dmagic/cache.hpp"
#include "dmagic/lcm.hpp"
#include "dmagic/magic.hpp"
#include "dmagic/natural.hpp"
#include "dmagic/oeis.hpp"
#include "dmagic/radix.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

dmagic::Natural read_value(const std::string& text, std::uint32_t from_base) {
  return dmagic::parse(text, dmagic::Radix{from_base});
}

int run_lcm(std::uint32_t limit, const std::string& cache_path) {
  const dmagic::RangeCeiling ceiling{limit};
  dmagic::Natural value;
  if (cache_path.empty()) {
    value = dmagic::lcm_range_fold(ceiling);
  } else {
    dmagic::LcmCache cache{cache_path};
    if (cache.load_status() == dmagic::LcmCache::LoadStatus::corrupt ||
        cache.load_status() == dmagic::LcmCache::LoadStatus::revalidated)
      std::cerr << "warning: " << cache.load_message() << '\n';
    value = dmagic::cache_get_or_compute(ceiling, cache);
  }
  std::cout << value.to_decimal() << '\n';
  return kExitOk;
}

int run_convert(const std::string& text, std::uint32_t from_base,
                std::uint32_t to_base) {
  const dmagic::Natural value = read_value(text, from_base);
  std::cout << dmagic::render(
                   dmagic::to_digits_dc(value, dmagic::Radix{to_base}))
            << '\n';
  return kExitOk;
}

int run_verify(const std::string& text, std::uint32_t from_base,
               std::uint32_t ceiling, const std::string& format) {
  const dmagic::MagicReport report =
      dmagic::verify(read_value(text, from_base), dmagic::RangeCeiling{ceiling});
  if (format == "pretty")
    std::cout << dmagic::to_pretty(report);
  else if (format == "structured")
    std::cout << dmagic::to_json(report);
  else
    std::cout << dmagic::to_tsv(report);
  return report.full_magic ? kExitOk : kExitFalse;
}

int run_table(const std::string& text, std::uint32_t from_base,
              std::uint32_t ceiling, const std::string& format) {
  const dmagic::Natural value = read_value(text, from_base);
  const dmagic::RangeCeiling limit{ceiling};
  std::cout << (format == "pretty" ? dmagic::magic_table_pretty(value, limit)
                                   : dmagic::magic_table(value, limit));
  return kExitOk;
}

int run_generate(std::uint32_t ceiling, std::uint32_t digit,
                 const std::string& start, std::uint64_t count) {
  const auto family =
      dmagic::generate_family(dmagic::RangeCeiling{ceiling}, digit,
                              dmagic::Natural::from_decimal(start), count);
  for (const auto& value : family) std::cout << value.to_decimal() << '\n';
  return kExitOk;
}

int run_oracle(std::uint32_t ceiling, const std::string& bound,
               unsigned jobs) {
  const auto members =
      dmagic::oracle_enumerate(dmagic::RangeCeiling{ceiling},
                               dmagic::Natural::from_decimal(bound), jobs);
  for (const auto& value : members) std::cout << value.to_decimal() << '\n';
  return kExitOk;
}

int run_check_oeis(std::int64_t max_index, const std::string& bfile_path,
                   bool fetch, const std::string& url,
                   const std::string& sequence_id) {
  std::string text;
  if (fetch) {
    text = dmagic::fetch_bfile(sequence_id, url);
  } else {
    std::ifstream in(bfile_path, std::ios::binary);
    if (!in.is_open())
      throw std::runtime_error("cannot open b-file " + bfile_path +
                               " (pass --bfile or --fetch)");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  const dmagic::BFileSequence sequence = dmagic::parse_bfile(text);
  const dmagic::CrossCheckReport report =
      dmagic::cross_check(max_index, sequence);

  for (const auto& mismatch : report.mismatches)
    std::cout << "mismatch\tn=" << mismatch.index << "\tcomputed="
              << mismatch.expected.to_decimal() << "\tlisted="
              << mismatch.found.to_decimal() << '\n';
  std::cout << "checked " << report.checked << " of "
            << (report.max_index + 1) << " indices, "
            << report.mismatches.size() << " mismatches, "
            << report.skipped.size() << " skipped\n";
  return report.ok() ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range lcm, radix conversion, and D-magic digit invariance"};
  app.require_subcommand(1);

  // lcm
  std::uint32_t lcm_limit = 0;
  std::string cache_path;
  auto* lcm_cmd = app.add_subcommand("lcm", "Print lcm(2..L) in decimal");
  lcm_cmd->add_option("L", lcm_limit, "Range ceiling, at least 1")
      ->required()
      ->check(CLI::Range(1u, 0xffffffffu));
  lcm_cmd->add_option("--cache", cache_path, "Persistent cache file")
      ->envname("DMAGIC_CACHE");

  // convert
  std::string convert_value;
  std::uint32_t convert_from = 10, convert_to = 10;
  auto* convert_cmd =
      app.add_subcommand("convert", "Rewrite a numeral in another radix");
  convert_cmd->add_option("value", convert_value, "Numeral text")->required();
  convert_cmd->add_option("--from", convert_from, "Input radix (default 10)")
      ->check(CLI::Range(2u, 0xffffffffu));
  convert_cmd->add_option("--to", convert_to, "Output radix (default 10)")
      ->check(CLI::Range(2u, 0xffffffffu));

  // verify
  std::string verify_value, verify_format = "tsv";
  std::uint32_t verify_base = 0, verify_from = 10;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check least-significant-digit invariance across bases 2..L");
  verify_cmd->add_option("M", verify_value, "Candidate number")->required();
  verify_cmd->add_option("--base", verify_base, "Ceiling base L")
      ->required()
      ->check(CLI::Range(2u, 0xffffffffu));
  verify_cmd->add_option("--from", verify_from, "Input radix (default 10)")
      ->check(CLI::Range(2u, 0xffffffffu));
  verify_cmd
      ->add_option("--format", verify_format, "tsv | pretty | structured")
      ->check(CLI::IsMember({"tsv", "pretty", "structured"}));

  // table
  std::string table_value, table_format = "tsv";
  std::uint32_t table_base = 0, table_from = 10;
  auto* table_cmd = app.add_subcommand(
      "table", "Print the per-base digit table for M, bases L down to 2");
  table_cmd->add_option("M", table_value, "Number to tabulate")->required();
  table_cmd->add_option("--base", table_base, "Ceiling base L")
      ->required()
      ->check(CLI::Range(2u, 0xffffffffu));
  table_cmd->add_option("--from", table_from, "Input radix (default 10)")
      ->check(CLI::Range(2u, 0xffffffffu));
  table_cmd->add_option("--format", table_format, "tsv | pretty")
      ->check(CLI::IsMember({"tsv", "pretty"}));

  // generate
  std::uint32_t generate_base = 0, generate_digit = 0;
  std::uint64_t generate_count = 1;
  std::string generate_start = "0";
  auto* generate_cmd = app.add_subcommand(
      "generate", "Emit lcm(2..L)*n + j for n = start .. start+count-1");
  generate_cmd->add_option("--base", generate_base, "Ceiling base L")
      ->required()
      ->check(CLI::Range(2u, 0xffffffffu));
  generate_cmd->add_option("--digit", generate_digit,
                           "Least significant digit j (default 0)");
  generate_cmd->add_option("--count", generate_count, "How many (default 1)")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  generate_cmd->add_option("--start", generate_start,
                           "First multiplier n, decimal (default 0)");

  // oracle
  std::uint32_t oracle_base = 0;
  unsigned oracle_jobs = 1;
  std::string oracle_bound;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Exhaustively list digit-invariant numbers up to a bound");
  oracle_cmd->add_option("--base", oracle_base, "Ceiling base L")
      ->required()
      ->check(CLI::Range(2u, 0xffffffffu));
  oracle_cmd->add_option("--bound", oracle_bound, "Scan bound, decimal")
      ->required();
  oracle_cmd->add_option("--jobs", oracle_jobs, "Worker threads (default 1)")
      ->check(CLI::Range(1u, 1024u));

  // check-oeis
  std::int64_t oeis_max = 100;
  std::string oeis_bfile = "data/b003418.txt";
  std::string oeis_url;
  std::string oeis_sequence = "A003418";
  bool oeis_fetch = false;
  auto* oeis_cmd = app.add_subcommand(
      "check-oeis", "Compare lcm(2..n) against an OEIS A003418 b-file");
  oeis_cmd->add_option("--max-n", oeis_max, "Highest index to check")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{0xffffffff}));
  oeis_cmd->add_option("--bfile", oeis_bfile,
                       "b-file path (default data/b003418.txt)");
  oeis_cmd->add_flag("--fetch", oeis_fetch, "Download the b-file instead");
  oeis_cmd->add_option("--url", oeis_url, "Override the fetch endpoint")
      ->envname("DMAGIC_OEIS_URL");
  oeis_cmd->add_option("--sequence", oeis_sequence,
                       "Sequence id (default A003418)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (lcm_cmd->parsed()) return run_lcm(lcm_limit, cache_path);
    if (convert_cmd->parsed())
      return run_convert(convert_value, convert_from, convert_to);
    if (verify_cmd->parsed())
      return run_verify(verify_value, verify_from, verify_base, verify_format);
    if (table_cmd->parsed())
      return run_table(table_value, table_from, table_base, table_format);
    if (generate_cmd->parsed())
      return run_generate(generate_base, generate_digit, generate_start,
                          generate_count);
    if (oracle_cmd->parsed())
      return run_oracle(oracle_base, oracle_bound, oracle_jobs);
    if (oeis_cmd->parsed())
      return run_check_oeis(oeis_max, oeis_bfile, oeis_fetch, oeis_url,
                            oeis_sequence);
  } catch (const dmagic::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
