// gksum: command-line front end.
// Exit codes: 0 success, 1 usage error, 2 verification mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gksum/formulas.hpp>
#include <gksum/report.hpp>
#include <gksum/verify.hpp>
#include <gksum/weyl_cache.hpp>

using namespace gksum;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string type;
  int rank = 0;
  bool affine = false;
  int height = 4;
  int order = 4;
  std::string lambda;
  std::string q;
  std::string u;
  std::string json_path;
  std::string cache_dir;
  unsigned threads = 1;
  int length = -1;
  bool check_mac = false;
  std::string suite = "all";
};

RootSystem root_system(const Common& c) {
  if (c.type.size() != 1) throw UsageError("--type must be one letter A-G");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(c.type[0])));
  if (!is_valid_cartan_type(f, c.rank))
    throw UsageError("unknown type " + std::string(1, f) + std::to_string(c.rank));
  return build_root_system(f, c.rank, c.affine);
}

DominantCoweight parse_lambda(const Common& c, const RootSystem& rs) {
  if (c.lambda.empty()) return DominantCoweight::zero(rs.dim);
  std::vector<int> labels;
  std::stringstream ss(c.lambda);
  for (std::string part; std::getline(ss, part, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed labels: " + c.lambda);
    }
    if (used != part.size()) throw UsageError("malformed labels: " + c.lambda);
    labels.push_back(v);
  }
  if (labels.size() != rs.dim)
    throw UsageError("--lambda needs " + std::to_string(rs.dim) + " labels for " + rs.name());
  for (int v : labels)
    if (v < 0) throw UsageError("lambda is not dominant: " + c.lambda);
  return DominantCoweight(labels);
}

std::optional<Rational> parse_opt_rational(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

std::optional<WeylTable> cached_table(const Common& c, const RootSystem& rs, int length) {
  if (c.cache_dir.empty() && !std::getenv("GKSUM_CACHE_DIR")) return std::nullopt;
  const std::filesystem::path dir = c.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(c.cache_dir);
  return load_or_build(rs, length, dir);
}

void write_json(const Common& c, const json& j) {
  if (c.json_path.empty()) return;
  std::ofstream out(c.json_path);
  if (!out) throw std::runtime_error("cannot write " + c.json_path);
  out << j.dump(2) << '\n';
}

template <class S>
void print_series(const RootSystem& rs, const S& s, const std::string& title) {
  std::cout << title << "  [" << rs.name() << ", N = " << s.max_height();
  if constexpr (std::is_same_v<S, FormalSeries<FormalRing>>) std::cout << ", M = " << s.ring().order;
  else std::cout << ", u = " << to_string(s.ring().u_value);
  std::cout << "]\n";
  for (const auto& [g, c] : s.terms()) {
    std::string coeff;
    if constexpr (std::is_same_v<S, FormalSeries<FormalRing>>) coeff = c.str();
    else coeff = to_string(c);
    std::printf("  %-16s h=%-3d %s\n", g.str().c_str(), g.height(), coeff.c_str());
  }
  if (s.is_zero()) std::cout << "  (zero)\n";
}

template <class S>
int emit(const Common& c, const RootSystem& rs, const S& s, const std::string& title) {
  print_series(rs, s, title);
  write_json(c, series_report(rs, s));
  return 0;
}

int cmd_roots(const Common& c) {
  const auto rs = root_system(c);
  std::cout << rs.name() << "\ncartan <a_i, a_j^v>:\n";
  for (std::size_t i = 0; i < rs.dim; ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < rs.dim; ++j) std::printf(" %3lld", static_cast<long long>(rs.cartan(i, j)));
    std::cout << '\n';
  }
  std::cout << "theta^v = " << rs.theta_coroot.str() << "\nexponents:";
  for (int m : rs.exponents) std::cout << ' ' << m;
  std::cout << '\n';
  if (rs.null_coroot) std::cout << "delta = " << rs.null_coroot->str() << "  (multiplicity " << rs.imaginary_multiplicity << ")\n";
  std::cout << "positive real coroots of height <= " << c.height << ":\n";
  for (const auto& b : positive_real_coroots_up_to_height(rs, c.height))
    std::cout << "  " << b.str() << "  h=" << b.height() << '\n';
  write_json(c, root_system_report(rs, c.height));
  return 0;
}

int cmd_weyl(const Common& c) {
  const auto rs = root_system(c);
  const int length = c.length >= 0 ? c.length : (rs.is_affine() ? 4 : required_length(rs, 0, 0));
  auto cached = cached_table(c, rs, length);
  const WeylTable t = cached ? std::move(*cached) : enumerate_up_to_length(rs, length);
  const auto counts = t.counts_by_length();
  std::cout << rs.name() << ": " << t.size() << " elements of length <= " << t.max_length()
            << (t.complete() ? " (whole group)" : "") << "\ncounts by length:";
  for (auto n : counts) std::cout << ' ' << n;
  std::cout << '\n';
  json j;
  j["root_system"] = rs.name();
  j["max_length"] = t.max_length();
  j["complete"] = t.complete();
  j["counts_by_length"] = counts;
  auto words = json::array();
  for (const auto& e : t.elements()) words.push_back(e.word);
  j["reduced_words"] = std::move(words);
  write_json(c, j);
  return 0;
}

int cmd_gk(const Common& c, bool force_affine) {
  Common cc = c;
  if (force_affine) cc.affine = true;
  const auto rs = root_system(cc);
  const auto u = parse_opt_rational(c.u, "--u");
  if (!rs.is_affine()) {
    if (u) return emit(c, rs, finite_gk(rs, c.height, SpecializedRing{*u}), "GK series");
    return emit(c, rs, finite_gk(rs, c.height, FormalRing{c.order}), "GK series");
  }
  auto table = cached_table(c, rs, required_length(rs, c.height, c.order));
  const auto gk = affine_gk(rs, c.height, c.order, nullptr, table ? &*table : nullptr, {c.threads});
  if (u) return emit(c, rs, specialize_u(gk, *u), "affine GK series");
  return emit(c, rs, gk, "affine GK series");
}

int cmd_macdonald(const Common& c) {
  const auto rs = root_system(c);
  require(!rs.is_affine(), "macdonald is for finite types; use hlam for affine ones");
  const auto lam = parse_lambda(c, rs);
  auto table = cached_table(c, rs, required_length(rs, c.height, 0));
  const WeylTable* tp = table ? &*table : nullptr;
  if (const auto u = parse_opt_rational(c.u, "--u"))
    return emit(c, rs, finite_macdonald(rs, lam, c.height, SpecializedRing{*u}, tp, {c.threads}).series,
                "S(" + lam.str() + ") normalized");
  return emit(c, rs, finite_macdonald(rs, lam, c.height, FormalRing{c.order}, tp, {c.threads}).series,
              "S(" + lam.str() + ") normalized");
}

int cmd_h0(const Common& c) {
  Common cc = c;
  cc.affine = true;
  const auto rs = root_system(cc);
  auto table = cached_table(c, rs, required_length(rs, c.height, c.order));
  const auto h0 = h_zero(rs, c.height, c.order, table ? &*table : nullptr, {c.threads});
  emit(c, rs, h0, "H_0");
  if (!c.check_mac) return 0;
  require(rs.simply_laced(), "--check-mac2003 needs a simply-laced type");
  const auto rhs = mac2003_rhs(rs, c.height, c.order);
  std::size_t bad = 0;
  for (const auto& [g, v] : h0.terms())
    if (!(rhs.coefficient(g) == v)) ++bad;
  for (const auto& [g, v] : rhs.terms())
    if (h0.coefficient(g).is_zero()) ++bad;
  if (bad == 0) {
    std::cout << "product form: all coefficients agree\n";
    return 0;
  }
  std::cout << "product form: " << bad << " coefficients differ\n";
  print_series(rs, rhs, "product form");
  return 2;
}

int cmd_hlam(const Common& c) {
  Common cc = c;
  cc.affine = true;
  const auto rs = root_system(cc);
  const auto lam = parse_lambda(c, rs);
  auto table = cached_table(c, rs, required_length(rs, c.height, c.order));
  const auto h = h_normalized(rs, lam, c.height, c.order, table ? &*table : nullptr, {c.threads});
  return emit(c, rs, h.series, "H(" + lam.str() + ") normalized");
}

int cmd_satake(const Common& c) {
  const auto rs = root_system(c);
  const auto lam = parse_lambda(c, rs);
  const auto q = parse_opt_rational(c.q, "--q");
  require(q.has_value(), "satake needs --q");
  require(*q > 1, "--q must exceed 1");
  auto table = cached_table(c, rs, required_length(rs, c.height, c.order));
  const auto s = satake(rs, lam, *q, c.height, c.order, table ? &*table : nullptr, {c.threads});
  return emit(c, rs, s.series, "S(" + lam.str() + ") at q = " + to_string(*q));
}

int cmd_verify(const Common& c) {
  VerifyOptions o;
  o.threads = c.threads;
  if (!c.type.empty()) o.only = root_system(c).desc;
  const auto& suites = verify_suites();
  std::vector<const SuiteEntry*> chosen;
  for (const auto& s : suites)
    if (c.suite == "all" || c.suite == s.name) chosen.push_back(&s);
  if (chosen.empty()) throw UsageError("unknown suite " + c.suite);
  bool all_ok = true;
  json j;
  j["suites"] = json::array();
  for (const auto* s : chosen) {
    const auto r = run_suite(*s, o);
    all_ok &= r.passed;
    std::printf("[%s] %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    for (const auto& line : r.lines) std::cout << "  " << line << '\n';
    j["suites"].push_back({{"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"lines", r.lines}});
  }
  j["passed"] = all_ok;
  write_json(c, j);
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gindikin-Karpelevich sums and spherical functions over finite and affine root systems"};
  app.require_subcommand(1);
  Common c;

  auto add_type = [&](CLI::App* sub, bool affine_flag) {
    sub->add_option("--type", c.type, "Cartan type letter A-G")->required();
    sub->add_option("--rank", c.rank, "rank of the finite part")->required();
    if (affine_flag) sub->add_flag("--affine", c.affine, "untwisted affine extension");
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--height", c.height, "truncation height N")->check(CLI::NonNegativeNumber);
    sub->add_option("--u-order", c.order, "truncation order M in u")->check(CLI::NonNegativeNumber);
  };
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--json", c.json_path, "write a JSON report to this path");
    sub->add_option("--cache", c.cache_dir, "Weyl table cache directory");
    sub->add_option("--threads", c.threads, "worker threads for Weyl sums")->check(CLI::PositiveNumber);
  };

  auto* roots = app.add_subcommand("roots", "root datum and positive coroots up to a height");
  add_type(roots, true);
  roots->add_option("--height", c.height, "largest height listed");
  roots->add_option("--json", c.json_path, "write a JSON report to this path");

  auto* weyl = app.add_subcommand("weyl", "enumerate the Weyl group by length");
  add_type(weyl, true);
  weyl->add_option("--length", c.length, "largest length (default: whole group, or 4 for affine)");
  add_io(weyl);

  auto* gk = app.add_subcommand("gk", "Gindikin-Karpelevich series");
  add_type(gk, true);
  add_window(gk);
  gk->add_option("--u", c.u, "exact rational value of u");
  add_io(gk);

  auto* mac = app.add_subcommand("macdonald", "normalized finite spherical function");
  add_type(mac, false);
  add_window(mac);
  mac->add_option("--lambda", c.lambda, "labels l1,l2,... of a dominant coweight");
  mac->add_option("--u", c.u, "exact rational value of u");
  add_io(mac);

  auto* h0 = app.add_subcommand("h0", "affine constant term H_0");
  add_type(h0, true);
  add_window(h0);
  h0->add_flag("--check-mac2003", c.check_mac, "compare with the infinite product form");
  add_io(h0);

  auto* hlam = app.add_subcommand("hlam", "normalized affine W-sum H_lambda");
  add_type(hlam, true);
  add_window(hlam);
  hlam->add_option("--lambda", c.lambda, "labels of a dominant coweight");
  add_io(hlam);

  auto* agk = app.add_subcommand("affine-gk", "affine Gindikin-Karpelevich series");
  add_type(agk, true);
  add_window(agk);
  agk->add_option("--u", c.u, "exact rational value of u");
  add_io(agk);

  auto* sat = app.add_subcommand("satake", "spherical function evaluated at u = 1/q");
  add_type(sat, true);
  add_window(sat);
  sat->add_option("--lambda", c.lambda, "labels of a dominant coweight");
  sat->add_option("--q", c.q, "residue field size, p/q allowed")->required();
  add_io(sat);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", c.suite, "suite name or 'all'");
  ver->add_option("--type", c.type, "restrict to one Cartan type letter");
  ver->add_option("--rank", c.rank, "rank for --type");
  ver->add_flag("--affine", c.affine, "affine extension for --type");
  ver->add_option("--json", c.json_path, "write a JSON report to this path");
  ver->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*roots) return cmd_roots(c);
    if (*weyl) return cmd_weyl(c);
    if (*gk) return cmd_gk(c, false);
    if (*mac) return cmd_macdonald(c);
    if (*h0) return cmd_h0(c);
    if (*hlam) return cmd_hlam(c);
    if (*agk) return cmd_gk(c, true);
    if (*sat) return cmd_satake(c);
    if (*ver) {
      if (!c.type.empty() && c.rank == 0) throw UsageError("--type needs --rank");
      return cmd_verify(c);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
