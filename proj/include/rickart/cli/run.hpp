#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rickart/acceptance.hpp"
#include "rickart/io/element_json.hpp"
#include "rickart/oracle.hpp"
#include "rickart/rickart.hpp"

namespace rickart::cli {

using nlohmann::json;

struct RunOutput {
  int code = 0;
  std::string out;
  std::string err;
};

inline constexpr std::uint64_t kDefaultSeed = 7;

/// Seed default: RICKART_SEED when set to a valid integer, else 7.
inline std::uint64_t default_seed() {
  if (const char* env = std::getenv("RICKART_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

/// FNV-1a, 64 bit.
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ULL;
    }
    h_ ^= 0xff;  // field separator
    h_ *= 1099511628211ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 14695981039346656037ULL;
};

namespace detail {

/// Failure raised for unusable input; exit code 2.
struct InputError {
  std::string kind;
  std::string field;
  std::string message;
};

inline std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"io", flag, flag + ": cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Fn>
auto schema_guard(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const io::SchemaError& e) {
    throw InputError{"schema", e.field(), e.what()};
  }
}

inline void render_text(const json& v, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, item] : v.items()) {
      if (item.is_structured() && !item.empty()) {
        os << pad << k << ":\n";
        render_text(item, indent + 2, os);
      } else {
        os << pad << k << ": " << item.dump() << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_structured() && !item.empty()) {
        os << pad << "-\n";
        render_text(item, indent + 2, os);
      } else {
        os << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    os << pad << v.dump() << "\n";
  }
}

struct Command {
  std::string name;
  Digest digest;
  std::uint64_t seed = kDefaultSeed;
  bool seeded = false;
  json results = json::object();
  bool pass = true;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void verdict(const std::string& check, bool ok) {
    ++checks;
    if (!ok) {
      ++failures;
      pass = false;
      results["failed_checks"].push_back(check);
    }
  }
};

// ---- subcommands ------------------------------------------------------------

template <class E>
void do_norm(const E& x, std::uint64_t seed, const Tolerance& tol, Command& cmd) {
  if (!is_bounded(x, tol)) throw Error(ErrorKind::NotBounded, "norm requires a bounded element");
  const double n = order_norm(x, tol);
  const auto cert = extract_bounded(x, tol);
  const auto cs = cstar_identity_check(x, tol);
  std::mt19937_64 rng(seed);
  auto states = sample_states_for(x, rng, tol);
  for (auto& s : extremal_states(x, tol)) states.push_back(std::move(s));
  const double sn = state_norm(x, states, tol);

  cmd.results["order_norm"] = n;
  cmd.results["certificate"] = cert ? json{{"lambda", cert->lambda}, {"verified", cert->verify(tol)}} : json(nullptr);
  cmd.results["cstar"] = {{"lhs", cs.lhs}, {"rhs", cs.rhs}, {"pass", cs.pass}};
  cmd.results["state_norm"] = {{"value", sn}, {"states", states.size()}};
  cmd.verdict("certificate", cert && cert->verify(tol));
  cmd.verdict("cstar_identity", cs.pass);
  cmd.verdict("state_norm_le_order_norm", sn <= n + tol.eps_eq);
  if constexpr (std::is_same_v<E, matrix::MatrixElement>) {
    const double oracle_norm = oracle::norm(x, tol);
    cmd.results["eigen_oracle"] = oracle_norm;
    cmd.verdict("order_norm_matches_oracle", std::abs(n - oracle_norm) <= 10 * tol.eps_eq * std::max(1.0, oracle_norm));
    cmd.verdict("state_norm_attained", std::abs(sn - n) <= 10 * tol.eps_eq * std::max(1.0, n));
  }
}

template <class E>
void do_spectral(const E& x, double mesh, const std::optional<Partition>& given, const Tolerance& tol,
                 Command& cmd) {
  if (!is_hermitian(x, tol)) throw Error(ErrorKind::NotHermitian, "spectral requires a hermitian element");
  const auto fam = spectral_family(x, tol);
  const AxiomReport rep = verify_spectral_family(fam, tol);
  cmd.results["family"] = io::to_json(fam);
  cmd.results["family_checks"] = rep.to_json()["checks"];
  cmd.verdict("family_properties", rep.all_passed());

  if (!is_bounded(x, tol)) {
    if (given) throw Error(ErrorKind::NotBounded, "riemann reconstruction requires a bounded element");
    cmd.results["reconstruction"] = {{"skipped", "element is not bounded"}};
    return;
  }
  const Partition p = given ? *given : Partition::covering(order_norm(x, tol), mesh);
  const auto rec = riemann_reconstruct(x, p, tol);
  const double bound = given ? p.mesh() : mesh;
  cmd.results["reconstruction"] = {{"partition", io::to_json(p)},
                                   {"approx", element_json(rec.approx)},
                                   {"error", rec.error},
                                   {"mesh", rec.mesh}};
  cmd.verdict("error_le_mesh", rec.error <= bound + tol.eps_eq);
}

template <class E>
void do_lattice(const std::string& op, const E& x, const std::optional<E>& z, const Tolerance& tol, Command& cmd) {
  const Tolerance tol10{10 * tol.eps_eq, tol.eps_psd, tol.probe_count};
  auto need_with = [&] {
    if (!z) throw InputError{"usage", "--with", "--with: required for --op " + op};
    return *z;
  };
  if (op == "pos-part") {
    const auto c = positive_part_construction(x, tol);
    const E r = positive_part(x, tol);
    const E one = one_like(x);
    cmd.results["result"] = element_json(r);
    cmd.verdict("matches_oracle", approx_equal(r, oracle::positive_part(x, tol), tol10));
    cmd.verdict("ge_zero", in_cone(r, tol));
    cmd.verdict("ge_x", leq(c.x, r, tol));
    cmd.verdict("xe_eq_ye", approx_equal(c.x * c.e, c.y * c.e, tol10));
    cmd.verdict("xf_eq_minus_yf", approx_equal(c.x * c.f, -(c.y * c.f), tol10));
    cmd.verdict("complements_orthogonal", approx_equal((one - c.e) * (one - c.f), zero_like(x), tol10));
  } else if (op == "abs") {
    const E r = abs_value(x, tol);
    cmd.results["result"] = element_json(r);
    cmd.verdict("abs_is_sum_of_parts", approx_equal(r, positive_part(x, tol) + positive_part(-x, tol), tol10));
    cmd.verdict("ge_zero", in_cone(r, tol));
  } else if (op == "join" || op == "meet") {
    const E w = need_with();
    if (!is_hermitian(w, tol)) throw Error(ErrorKind::NotHermitian, op + " requires hermitian operands");
    const bool is_join = op == "join";
    const E r = is_join ? join(x, w, tol) : meet(x, w, tol);
    cmd.results["result"] = element_json(r);
    cmd.verdict(is_join ? "ge_x" : "le_x", is_join ? leq(x, r, tol) : leq(r, x, tol));
    cmd.verdict(is_join ? "ge_with" : "le_with", is_join ? leq(w, r, tol) : leq(r, w, tol));
  } else {
    throw InputError{"usage", "--op", "--op: expected pos-part, join, meet, abs, or sup"};
  }
}

template <class E>
void do_sup(const io::SequenceDocument& doc, const E& v, const Tolerance& tol, Command& cmd) {
  const auto seq = io::to_increasing<E>(doc);
  const auto r = sup_increasing(seq, v, tol);
  cmd.results["result"] = element_json(r.sup);
  cmd.results["limit_residual"] = r.limit_residual;
  cmd.verdict("w_times_w_inverse_is_one", r.inverse_ok);
  cmd.verdict("w_inverse_le_one", r.w_inv_le_one);
  cmd.verdict("compressed_sequence_increasing_and_bounded", r.compressed_ok);
  bool upper = true;
  for (const auto& t : seq.prefix) upper = upper && leq(t, r.sup, tol);
  if (seq.limit) upper = upper && leq(seq.limit->limit, r.sup, Tolerance{100 * tol.eps_eq, tol.eps_psd, tol.probe_count});
  cmd.verdict("upper_bound", upper);
  cmd.verdict("le_v", leq(r.sup, v, tol));
}

template <class E>
void do_series(const io::SequenceDocument& doc, const Tolerance& tol, Command& cmd) {
  const auto s = io::to_series<E>(doc);
  const auto out = series_sup(s, tol);
  json bounds = json::array();
  for (const auto& b : out.tail_bounds) bounds.push_back({{"k", b.k}, {"lhs", b.lhs}, {"rhs", b.rhs}});
  cmd.results["sup"] = element_json(out.sup);
  cmd.results["tail_bounds"] = std::move(bounds);
  cmd.verdict("tail_bounds", out.bounds_hold(tol.eps_eq));
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 all checks
/// passed, 1 some check failed, 2 unusable input or usage.
inline RunOutput run(const std::vector<std::string>& args) {
  RunOutput result;
  const auto started = std::chrono::steady_clock::now();
  const Tolerance tol;

  CLI::App app{"Computes and audits Rickart ordered *-algebras in the matrix and step-function models.", "rickart"};
  app.require_subcommand(1);
  bool pretty = false, timing = false;
  app.add_flag("--pretty", pretty, "Human-readable text instead of JSON");
  app.add_flag("--timing", timing, "Include wall_time in the report");

  std::uint64_t seed = default_seed();
  std::string input, with_file, partition_file, model = "matrix", op;
  std::size_t dim = 2, samples = 100;
  double mesh = 0.1;
  bool all = false;
  int criterion = 0;

  auto* axioms = app.add_subcommand("axioms", "Randomized audit of the RO*-algebra axioms");
  axioms->add_option("--model", model, "matrix or stepfn")->check(CLI::IsMember({"matrix", "stepfn"}));
  axioms->add_option("--dim", dim, "Matrix size n")->check(CLI::Range(std::size_t{1}, matrix::kMaxDim));
  axioms->add_option("--samples", samples, "Number of random trials")->required()->check(CLI::PositiveNumber);
  axioms->add_option("--seed", seed, "Random seed");

  auto* spectral = app.add_subcommand("spectral", "Spectral family and Riemann reconstruction");
  spectral->add_option("--input", input, "Element JSON file")->required();
  spectral->add_option("--mesh", mesh, "Partition mesh")->required()->check(CLI::PositiveNumber);
  spectral->add_option("--partition", partition_file, "Partition JSON file");

  auto* norm = app.add_subcommand("norm", "Order norm, C*-identity, and state norm");
  norm->add_option("--input", input, "Element JSON file")->required();
  norm->add_option("--seed", seed, "Random seed for sampled states");

  auto* lattice = app.add_subcommand("lattice", "Lattice operations");
  lattice->add_option("--input", input, "Element JSON file (sequence document for --op sup)")->required();
  lattice->add_option("--with", with_file, "Second operand (the bound v for --op sup)");
  lattice->add_option("--op", op, "pos-part, join, meet, abs, or sup")
      ->required()
      ->check(CLI::IsMember({"pos-part", "join", "meet", "abs", "sup"}));

  auto* series = app.add_subcommand("series", "Supremum of a dominated series with tail bounds");
  series->add_option("--input", input, "Sequence JSON file")->required();

  auto* report = app.add_subcommand("report", "Acceptance suite");
  report->add_flag("--all", all, "Run every criterion");
  report->add_option("--criterion", criterion, "Run one criterion (1-9)")->check(CLI::Range(1, 9));
  report->add_option("--seed", seed, "Random seed");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"rickart"};
  for (const auto& a : args) argv.push_back(a.c_str());

  auto fail_input = [&](const std::string& kind, const std::string& field, const std::string& message) {
    json e = {{"error", {{"kind", kind}, {"field", field}, {"message", message}}}};
    result.code = 2;
    result.out = e.dump() + "\n";
    result.err = "rickart: " + message + "\n";
    return result;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    return fail_input("usage", "", e.what());
  }

  detail::Command cmd;
  cmd.seed = seed;
  try {
    auto load_element = [&](const std::string& path, const std::string& flag) {
      const std::string text = detail::read_file(path, flag);
      cmd.digest.add(text);
      return detail::schema_guard([&] { return io::parse_element(io::parse_text(text)); });
    };

    if (axioms->parsed()) {
      cmd.name = "axioms";
      cmd.seeded = true;
      cmd.digest.add("model=" + model + ";dim=" + std::to_string(dim) + ";samples=" + std::to_string(samples));
      const AxiomReport rep = model == "matrix" ? audit_axioms(MatrixModel{dim}, seed, samples, tol)
                                               : audit_axioms(StepFnModel{}, seed, samples, tol);
      cmd.results = rep.to_json();
      cmd.results["model"] = model == "matrix" ? MatrixModel{dim}.descriptor() : StepFnModel{}.descriptor();
      for (const auto& [name, rec] : rep.checks()) cmd.verdict(name, rec.pass);
    } else if (spectral->parsed()) {
      cmd.name = "spectral";
      const io::Element x = load_element(input, "--input");
      cmd.digest.add("mesh=" + json(mesh).dump());
      std::optional<Partition> p;
      if (!partition_file.empty()) {
        const std::string text = detail::read_file(partition_file, "--partition");
        cmd.digest.add(text);
        p = detail::schema_guard([&] { return io::parse_partition(io::parse_text(text)); });
      }
      std::visit([&](const auto& e) { detail::do_spectral(e, mesh, p, tol, cmd); }, x);
    } else if (norm->parsed()) {
      cmd.name = "norm";
      cmd.seeded = true;
      const io::Element x = load_element(input, "--input");
      std::visit([&](const auto& e) { detail::do_norm(e, seed, tol, cmd); }, x);
    } else if (lattice->parsed()) {
      cmd.name = "lattice";
      cmd.digest.add("op=" + op);
      cmd.results["op"] = op;
      if (op == "sup") {
        const std::string text = detail::read_file(input, "--input");
        cmd.digest.add(text);
        const auto doc = detail::schema_guard([&] { return io::parse_sequence(io::parse_text(text)); });
        if (with_file.empty()) throw detail::InputError{"usage", "--with", "--with: required for --op sup"};
        const io::Element v = load_element(with_file, "--with");
        std::visit(
            [&](const auto& first) {
              using E = std::decay_t<decltype(first)>;
              const E bound = detail::schema_guard([&] { return io::expect<E>(v, "--with"); });
              detail::do_sup(doc, bound, tol, cmd);
            },
            doc.terms.front());
      } else {
        const io::Element x = load_element(input, "--input");
        std::optional<io::Element> z;
        if (!with_file.empty()) z = load_element(with_file, "--with");
        std::visit(
            [&](const auto& e) {
              using E = std::decay_t<decltype(e)>;
              std::optional<E> w;
              if (z) w = detail::schema_guard([&] { return io::expect<E>(*z, "--with"); });
              detail::do_lattice(op, e, w, tol, cmd);
            },
            x);
      }
    } else if (series->parsed()) {
      cmd.name = "series";
      const std::string text = detail::read_file(input, "--input");
      cmd.digest.add(text);
      const auto doc = detail::schema_guard([&] { return io::parse_sequence(io::parse_text(text)); });
      if (!doc.eps) throw detail::InputError{"schema", "eps", "eps: missing (required for a dominated series)"};
      std::visit([&](const auto& first) { detail::do_series<std::decay_t<decltype(first)>>(doc, tol, cmd); },
                 doc.terms.front());
    } else if (report->parsed()) {
      cmd.name = "report";
      cmd.seeded = true;
      if (all == (criterion != 0))
        throw detail::InputError{"usage", "--all", "report: give exactly one of --all or --criterion N"};
      cmd.digest.add(all ? "all" : "criterion=" + std::to_string(criterion));
      json criteria = json::array();
      for (int id = 1; id <= 9; ++id) {
        if (!all && id != criterion) continue;
        const auto r = acceptance::run(id, seed, tol);
        criteria.push_back(acceptance::to_json(r));
        cmd.verdict("criterion_" + std::to_string(id), r.pass);
      }
      cmd.results["criteria"] = std::move(criteria);
    }
  } catch (const detail::InputError& e) {
    return fail_input(e.kind, e.field, e.message);
  } catch (const Error& e) {
    return fail_input(std::string(to_string(e.kind())), "", e.what());
  }

  json out;
  out["command"] = cmd.name;
  out["inputs_digest"] = cmd.digest.hex();
  out["seed"] = cmd.seeded ? json(cmd.seed) : json(nullptr);
  out["results"] = std::move(cmd.results);
  out["summary"] = {{"pass", cmd.pass}, {"checks", cmd.checks}, {"failures", cmd.failures}};
  if (timing)
    out["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (pretty) {
    std::ostringstream os;
    detail::render_text(out, 0, os);
    result.out = os.str();
  } else {
    result.out = out.dump() + "\n";
  }
  result.code = cmd.pass ? 0 : 1;
  return result;
}

}  // namespace rickart::cli
