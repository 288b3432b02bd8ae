#pragma once

// Command dispatch behind the quotient-forge executable.

#include "quotient_forge/io.hpp"
#include "quotient_forge/properties.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qforge {

enum class Command { Resolve, Invariants, Mckay, Specials, Quiver, Ideals, Verify, Sweep };
enum class Format { Json, Dot, Cas, Text };

struct RunConfig {
  Command command = Command::Verify;
  std::optional<int> r, a;
  Format format = Format::Text;
  int sweep_max = 0;
  std::optional<std::uint64_t> seed;
  int sample = 0; // sweep only; 0 checks every group
  std::optional<std::string> out_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedClaim = 1;
inline constexpr int kExitInvalidInput = 2;

inline auto command_names() -> std::vector<std::pair<std::string, Command>> {
  return {{"resolve", Command::Resolve}, {"invariants", Command::Invariants},
          {"mckay", Command::Mckay},     {"specials", Command::Specials},
          {"quiver", Command::Quiver},   {"ideals", Command::Ideals},
          {"verify", Command::Verify},   {"sweep", Command::Sweep}};
}

inline auto format_names() -> std::vector<std::pair<std::string, Format>> {
  return {{"json", Format::Json}, {"dot", Format::Dot}, {"cas", Format::Cas}, {"text", Format::Text}};
}

namespace detail {

inline auto supports(Command c, Format f) -> bool {
  switch (f) {
  case Format::Json:
  case Format::Text: return true;
  case Format::Dot: return c == Command::Mckay || c == Command::Quiver;
  case Format::Cas: return c == Command::Ideals;
  }
  return false;
}

inline auto monomial_list(const std::vector<PlaneMonomial> &ms) -> std::string {
  std::string s;
  for (const auto &m : ms) s += (s.empty() ? "" : ", ") + to_string(m);
  return s;
}

struct Verification {
  Report main, shadow;
  [[nodiscard]] auto passed() const -> bool { return main.passed() && shadow.passed(); }
};

inline auto verify(const GroupType &g) -> Verification {
  return {main_theorem_check(g), k_theory_shadow(g)};
}

inline auto verification_json(const Verification &v) -> json {
  return json{{"main", v.main}, {"k_theory", v.shadow}, {"passed", v.passed()}};
}

inline auto run_command(const RunConfig &cfg, std::ostream &out, std::ostream &err) -> int {
  if (!detail::supports(cfg.command, cfg.format)) {
    err << "error: this command has no output in the requested format\n";
    return kExitInvalidInput;
  }
  if (cfg.command == Command::Sweep) {
    if (cfg.sweep_max < 2) {
      err << "error: sweep needs --max >= 2\n";
      return kExitInvalidInput;
    }
    auto groups = all_groups(cfg.sweep_max);
    if (cfg.sample > 0 && cfg.sample < static_cast<int>(groups.size())) {
      std::mt19937_64 rng(cfg.seed.value_or(0));
      std::shuffle(groups.begin(), groups.end(), rng);
      groups.resize(static_cast<std::size_t>(cfg.sample));
      std::sort(groups.begin(), groups.end());
    }
    auto mains = parallel_sweep(groups, [](const GroupType &g) { return main_theorem_check(g); });
    bool all = true;
    json reports = json::array();
    for (std::size_t k = 0; k < groups.size(); ++k) {
      const auto &g = groups[k];
      Verification v{mains[k], k_theory_shadow(g)};
      all = all && v.passed();
      if (cfg.format == Format::Json)
        reports.push_back(detail::verification_json(v));
      else
        out << (v.passed() ? "PASS " : "FAIL ") << to_string(g) << "\n";
      if (!v.passed() && cfg.format == Format::Text)
        out << format_report(v.main) << format_report(v.shadow);
    }
    if (cfg.format == Format::Json)
      out << emit_json(json{{"max_r", cfg.sweep_max}, {"passed", all}, {"report", reports}});
    else
      out << groups.size() << " groups checked, " << (all ? "all pass" : "failures above") << "\n";
    return all ? kExitOk : kExitFailedClaim;
  }

  if (!cfg.r || !cfg.a) {
    err << "error: --r and --a are required\n";
    return kExitInvalidInput;
  }
  auto g = validate_group(*cfg.r, *cfg.a);

  auto rd = resolution_data(g);
  json doc{{"group", g}};
  const bool as_json = cfg.format == Format::Json;

  switch (cfg.command) {
  case Command::Resolve:
    if (as_json) {
      doc["resolution"] = rd;
      out << emit_json(doc);
    } else {
      out << format_resolution(rd);
    }
    return kExitOk;

  case Command::Invariants: {
    auto gens = invariant_generators(g, rd);
    if (as_json) {
      doc["invariants"] = gens;
      out << emit_json(doc);
    } else {
      out << to_string(g) << " invariant generators: " << detail::monomial_list(gens) << "\n";
    }
    return kExitOk;
  }

  case Command::Mckay: {
    auto mq = build_mckay(g, rd);
    if (as_json) {
      doc["quiver"] = mq;
      out << emit_json(doc);
    } else if (cfg.format == Format::Dot) {
      out << emit_dot(mq.quiver, to_string(g), false);
    } else {
      out << "McKay quiver of " << to_string(g) << ": " << format_quiver(mq.quiver)
          << "relations:\n" << format_relations(mq.relations);
    }
    return kExitOk;
  }

  case Command::Specials: {
    auto specials = special_characters(g, rd);
    if (as_json) {
      json list = json::array();
      for (int i = 1; i <= rd.ell; ++i)
        list.push_back({{"vertex", i},
                        {"degree", specials[i - 1].idx},
                        {"representation", contragredient(specials[i - 1], g).idx}});
      doc["specials"] = list;
      out << emit_json(doc);
    } else {
      out << to_string(g) << " special representations (dual of the degree):";
      for (auto c : specials) out << " " << c.idx << "*";
      out << "\n";
    }
    return kExitOk;
  }

  case Command::Quiver: {
    auto sq = build_special_quiver(g, rd);
    if (as_json) {
      doc["resolution"] = rd;
      doc["quiver"] = sq;
      doc["quiver"]["relations"] = lambda_relations(sq);
      out << emit_json(doc);
    } else if (cfg.format == Format::Dot) {
      out << emit_dot(sq.quiver, to_string(g));
    } else {
      out << "Special McKay quiver of " << to_string(g) << ": " << format_quiver(sq.quiver, sq.kind)
          << "relations:\n" << format_relations(lambda_relations(sq));
    }
    return kExitOk;
  }

  case Command::Ideals: {
    auto sq = build_special_quiver(g, rd);
    auto ideals = compute_ideals(sq);
    if (as_json) {
      doc["ideals"] = ideals;
      out << emit_json(doc);
    } else if (cfg.format == Format::Cas) {
      out << emit_cas(g, ideals);
    } else {
      out << to_string(g) << "\n" << format_ideals(ideals);
    }
    return kExitOk;
  }

  case Command::Verify: {
    auto v = detail::verify(g);
    if (as_json) {
      doc["report"] = detail::verification_json(v);
      out << emit_json(doc);
    } else {
      out << format_report(v.main) << format_report(v.shadow);
    }
    return v.passed() ? kExitOk : kExitFailedClaim;
  }

  case Command::Sweep: break;
  }
  return kExitOk;
}

} // namespace detail

/// Runs one command; the artifact goes to `out`, diagnostics to `err`.
inline auto run(const RunConfig &cfg, std::ostream &out, std::ostream &err) -> int {
  try {
    return detail::run_command(cfg, out, err);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::logic_error &e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitFailedClaim;
  }
}

} // namespace qforge
