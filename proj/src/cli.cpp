#include "fcx/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fcx/coxeter.hpp"
#include "fcx/errors.hpp"
#include "fcx/families.hpp"
#include "fcx/genfun.hpp"
#include "fcx/growth.hpp"
#include "fcx/heap.hpp"
#include "fcx/oracle.hpp"
#include "fcx/walk.hpp"

namespace fcx::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec;
  std::optional<int> qmax;
  std::string format = "json";
  std::string out_path;
  bool stream = false;
  std::string word;
  std::string family = "G";
  int n = 0;
  int start = 0;
  bool star = false;
  bool touch = false;
  std::string stat = "ht";
};

TypeSpec parse_spec(const std::string& text) {
  try {
    return TypeSpec::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

int resolve_qmax(const Options& o, const TypeSpec& spec) {
  return o.qmax ? *o.qmax : default_qmax(spec);
}

void require_json(const Options& o, const char* verb) {
  if (o.format != "json")
    throw UsageError(std::string(verb) + " only supports --format json");
}

int do_enum(const Options& o, std::ostream& out) {
  const TypeSpec spec = parse_spec(o.spec);
  const auto g = build_graph(spec);
  const int qmax = resolve_qmax(o, spec);
  if (o.stream) {
    require_json(o, "enum --stream");
    for_each_fc(g, qmax, [&](const FcElement& e) {
      out << nlohmann::json{{"len", e.length}, {"word", g.format_word(e.word)}}.dump() << '\n';
    });
    return kOk;
  }
  const auto rec = enumerate_fc(g, qmax);
  if (o.format == "csv") {
    out << "length,count\n";
    for (std::size_t i = 0; i < rec.counts.size(); ++i)
      out << i << ',' << rec.counts[i] << '\n';
    return kOk;
  }
  out << nlohmann::json{{"spec", spec.to_string()},
                        {"qmax", rec.max_len},
                        {"complete", rec.complete},
                        {"counts", rec.counts}}
             .dump()
      << '\n';
  return kOk;
}

int do_gf(const Options& o, std::ostream& out) {
  const TypeSpec spec = parse_spec(o.spec);
  const auto r = generating_function(spec, resolve_qmax(o, spec));
  if (o.format == "csv")
    out << to_csv(r);
  else
    out << to_json(r).dump() << '\n';
  return kOk;
}

int do_period(const Options& o, std::ostream& out) {
  require_json(o, "period");
  const TypeSpec spec = parse_spec(o.spec);
  PeriodReport rep;
  if (stated_periodicity(spec)) {
    rep = verify_theorem(spec, o.qmax.value_or(0));
  } else {
    if (!spec.is_affine())
      throw InsufficientData(spec.to_string() + " has finitely many FC elements");
    rep = detect_period(enumerate_fc(build_graph(spec), resolve_qmax(o, spec)).counts);
  }
  nlohmann::json j{{"spec", spec.to_string()},
                   {"start", rep.start},
                   {"period", rep.period},
                   {"pattern", rep.pattern},
                   {"verified_up_to", rep.verified_up_to},
                   {"mean", rational_string(rep.mean())}};
  if (rep.stated) {
    j["stated"] = {{"start", rep.stated->start}, {"period", rep.stated->period}};
    j["divides_stated"] = rep.divides_stated;
    j["stated_start_sharp"] = rep.stated_start_sharp;
  } else {
    j["stated"] = nullptr;
  }
  out << j.dump() << '\n';
  return kOk;
}

int do_classify(const Options& o, std::ostream& out) {
  require_json(o, "classify");
  const TypeSpec spec = parse_spec(o.spec);
  const auto g = build_graph(spec);
  const Heap h = Heap::of_word(g, g.parse_word(o.word));
  FamilyLabel label;
  if (spec.family == Family::Ctilde)
    label = classify_ctilde(g, h);
  else if (spec.family == Family::Btilde || spec.family == Family::Dtilde)
    label = classify_bd(g, h).label;
  else
    throw RankOutOfRange("classify needs an affine B, C or D type, got " + spec.to_string());
  out << to_json(label).dump() << '\n';
  return kOk;
}

int do_check(const Options& o, std::ostream& out) {
  require_json(o, "check");
  const TypeSpec spec = parse_spec(o.spec);
  const int qmax = o.qmax.value_or(default_qmax(spec));
  const auto formula = generating_function(spec, qmax);
  const auto oracle = enumerate_fc(build_graph(spec), qmax);
  nlohmann::json mismatches = nlohmann::json::array();
  for (int len = 0; len <= qmax; ++len) {
    const auto expected = static_cast<std::int64_t>(oracle.counts[static_cast<std::size_t>(len)]);
    const auto got = formula.coefficient(len);
    if (expected != got)
      mismatches.push_back({{"len", len}, {"oracle", expected}, {"formula", got}});
  }
  const bool match = mismatches.empty();
  out << nlohmann::json{{"spec", spec.to_string()},
                        {"qmax", qmax},
                        {"match", match},
                        {"mismatches", mismatches}}
             .dump()
      << '\n';
  return match ? kOk : kCheckMismatch;
}

int do_walks(const Options& o, std::ostream& out) {
  WalkFamily fam;
  if (o.family == "G")
    fam = WalkFamily::G(o.n);
  else if (o.family == "Q")
    fam = WalkFamily::Q(o.n);
  else if (o.family == "M")
    fam = WalkFamily::M(o.n, o.start);
  else if (o.family == "O")
    fam = WalkFamily::O(o.n);
  else
    throw UsageError("--family must be one of G, Q, M, O");
  fam.star = o.star;
  fam.touch = o.touch;
  const WalkStat stat = o.stat == "htprime" ? WalkStat::HtPrime : WalkStat::Ht;
  const int qmax = o.qmax.value_or(20);
  const QPoly p = enumerate_walks(fam, stat, qmax);
  if (o.format == "csv") {
    out << "length,count\n";
    for (int d = 0; d <= qmax; ++d)
      out << d << ',' << p[d] << '\n';
    return kOk;
  }
  out << nlohmann::json{{"family", o.family},
                        {"n", o.n},
                        {"start", o.start},
                        {"star", o.star},
                        {"touch", o.touch},
                        {"stat", o.stat},
                        {"qmax", qmax},
                        {"coeffs", to_json(p)}}
             .dump()
      << '\n';
  return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fully commutative elements of Coxeter groups", "fcx"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    auto* spec = sub->add_option("--spec", o.spec, "type string, e.g. Atilde:4");
    if (needs_spec)
      spec->required();
    sub->add_option("--qmax", o.qmax, "largest length")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out_path, "write output to this file");
  };

  auto* enum_cmd = app.add_subcommand("enum", "count FC elements by length");
  add_common(enum_cmd, true);
  enum_cmd->add_flag("--stream", o.stream, "one JSON line per element");
  auto* gf_cmd = app.add_subcommand("gf", "length generating function");
  add_common(gf_cmd, true);
  auto* period_cmd = app.add_subcommand("period", "periodicity report");
  add_common(period_cmd, true);
  auto* classify_cmd = app.add_subcommand("classify", "family of an affine C, B or D heap");
  add_common(classify_cmd, true);
  classify_cmd->add_option("--word", o.word, "space-separated generator names")->required();
  auto* check_cmd = app.add_subcommand("check", "oracle against generating function");
  add_common(check_cmd, true);
  auto* walks_cmd = app.add_subcommand("walks", "walk counts by weight");
  add_common(walks_cmd, false);
  walks_cmd->add_option("--family", o.family, "G, Q, M or O");
  walks_cmd->add_option("--n", o.n, "walk length")->check(CLI::NonNegativeNumber);
  walks_cmd->add_option("--start", o.start, "start height for M")->check(CLI::NonNegativeNumber);
  walks_cmd->add_flag("--star", o.star, "restrict to (*) walks");
  walks_cmd->add_flag("--touch", o.touch, "restrict to walks touching the axis");
  walks_cmd->add_option("--stat", o.stat, "ht or htprime")->check(CLI::IsMember({"ht", "htprime"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fcx: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (*enum_cmd)
      code = do_enum(o, buffer);
    else if (*gf_cmd)
      code = do_gf(o, buffer);
    else if (*period_cmd)
      code = do_period(o, buffer);
    else if (*classify_cmd)
      code = do_classify(o, buffer);
    else if (*check_cmd)
      code = do_check(o, buffer);
    else if (*walks_cmd)
      code = do_walks(o, buffer);
  } catch (const UsageError& e) {
    err << "fcx: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "fcx: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "fcx: " << e.what() << '\n';
    return kDomainError;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) {
      err << "fcx: cannot write " << o.out_path << '\n';
      return kDomainError;
    }
  }
  return code;
}

} // namespace fcx::cli
