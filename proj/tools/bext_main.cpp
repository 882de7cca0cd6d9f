#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bext/acceptance.hpp"
#include "bext/bicyclic_ext.hpp"
#include "bext/conv_iso.hpp"
#include "bext/element_io.hpp"
#include "bext/endomorphism.hpp"
#include "bext/errors.hpp"
#include "bext/matrix_units.hpp"
#include "bext/omega_family.hpp"

// Exit codes: 0 computed / verified, 1 a verification failed (a witness is
// printed), 2 bad input or usage.

namespace {

using nlohmann::ordered_json;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// ---------------------------------------------------------------- mul -----

struct MulOpts {
  std::string lhs, rhs;
  std::string semigroup = "auto";
  std::string family_text;
  std::uint32_t n = 0;
  std::uint32_t lambda = 0;
  bool has_n = false, has_family = false, has_lambda = false;
  bool json = false;
};

int run_mul(const MulOpts& o) {
  bext::EltKind ka = bext::detect_kind(o.lhs);
  bext::EltKind kb = bext::detect_kind(o.rhs);
  auto resolved = [&]() -> std::string {
    if (o.semigroup != "auto") return o.semigroup;
    auto name = [](bext::EltKind k) -> std::string {
      switch (k) {
        case bext::EltKind::ext: return "ext";
        case bext::EltKind::conv: return "conv";
        case bext::EltKind::unit: return "mu";
        default: return "";
      }
    };
    std::string na = name(ka), nb = name(kb);
    if (na.empty()) return nb;
    if (nb.empty()) return na;
    if (na != nb) return "!";
    return na;
  }();
  if (resolved.empty())
    return usage_error("both operands are a bare 0; say --semigroup ext, "
                       "conv or mu");
  if (resolved == "!")
    return usage_error("operands come from different semigroups");
  auto check_kind = [&](bext::EltKind k, const std::string& want) {
    return k == bext::EltKind::ambiguous_zero ||
           (want == "ext" && k == bext::EltKind::ext) ||
           (want == "conv" && k == bext::EltKind::conv) ||
           (want == "mu" && k == bext::EltKind::unit);
  };
  if (!check_kind(ka, resolved) || !check_kind(kb, resolved))
    return usage_error("an operand does not belong to the " + resolved +
                       " semigroup");

  if (resolved == "mu") {
    if (!o.has_lambda) return usage_error("matrix units need --lambda");
    bext::MatUnit x = bext::parse_unit_elt(o.lhs);
    bext::MatUnit y = bext::parse_unit_elt(o.rhs);
    for (const auto& u : {x, y})
      if (!u.is_zero() && (u.a >= o.lambda || u.b >= o.lambda))
        return usage_error("unit index out of range for lambda");
    bext::MatUnit z = bext::mu_mul(x, y);
    if (o.json)
      std::cout << bext::to_json(z).dump() << "\n";
    else
      std::cout << bext::show(z) << "\n";
    return 0;
  }

  if (resolved == "conv") {
    bext::ConvIso a = bext::parse_conv_elt(o.lhs);
    bext::ConvIso b = bext::parse_conv_elt(o.rhs);
    if (o.has_n && (a.rank() > o.n || b.rank() > o.n))
      return usage_error("operand rank exceeds --n");
    bext::ConvIso c = bext::compose(a, b);
    if (o.json)
      std::cout << bext::to_json(c).dump() << "\n";
    else
      std::cout << bext::show(c) << "\n";
    return 0;
  }

  // extension elements need an ambient family
  if (!o.has_family && !o.has_n)
    return usage_error("extension elements need --family or --n");
  bext::OmegaFamily fam = o.has_family
                              ? bext::parse_family(o.family_text)
                              : bext::OmegaFamily::initial_intervals(o.n);
  bext::ExtSemigroup sgp(fam);
  bext::BExtElt x, y;
  try {
    auto realize = [&](const std::string& text) {
      bext::BExtElt e = bext::parse_ext_elt(text);
      return e.is_zero() ? sgp.zero() : sgp.make(e.i, e.j, e.F);
    };
    x = realize(o.lhs);
    y = realize(o.rhs);
  } catch (const bext::StructureError& e) {
    return usage_error(e.what());
  }
  bext::BExtElt z = sgp.mul(x, y);  // StructureError here means the family
                                    // is not omega-closed: exit 1 in main
  if (o.json)
    std::cout << bext::to_json(z).dump() << "\n";
  else
    std::cout << bext::show(z) << "\n";
  return 0;
}

// ------------------------------------------------------- family-check -----

int run_family_check(const std::string& text, bool json) {
  bext::OmegaFamily fam = bext::parse_family(text);
  bext::ClosureVerdict v = fam.is_omega_closed();
  if (v.closed) {
    if (json)
      std::cout << ordered_json{{"closed", true}}.dump() << "\n";
    else
      std::cout << "omega-closed\n";
    return 0;
  }
  const bext::ClosureWitness& w = *v.witness;
  bext::OmegaSet escape = bext::shift_intersect_down(w.n, w.f1, w.f2);
  if (json) {
    ordered_json j{{"closed", false},
                   {"witness",
                    {{"n", w.n},
                     {"F1", bext::show(w.f1)},
                     {"F2", bext::show(w.f2)},
                     {"escapes", bext::show(escape)}}}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "not omega-closed: F1 ∩ (-n + F2) = " << escape
              << " is outside the family for n=" << w.n << ", F1=" << w.f1
              << ", F2=" << w.f2 << "\n";
  }
  return 1;
}

// ----------------------------------------------------------- iso-check ----

int run_iso_check(std::uint32_t n, std::uint64_t w, bool json) {
  auto ext = bext::ExtSemigroup::initial_intervals(n - 1);
  bext::ConvSemigroup conv{n};
  auto ewin = ext.window(w);
  std::uint64_t pairs = 0, trips = 0;
  for (const auto& x : ewin) {
    if (!(bext::conv_to_ext(bext::ext_to_conv(x, n), n) == x)) {
      std::cout << "round trip failed at " << x << "\n";
      return 1;
    }
    ++trips;
    for (const auto& y : ewin) {
      bext::ConvIso lhs = bext::ext_to_conv(ext.mul(x, y), n);
      bext::ConvIso rhs =
          bext::compose(bext::ext_to_conv(x, n), bext::ext_to_conv(y, n));
      ++pairs;
      if (!(lhs == rhs)) {
        std::cout << "homomorphism failed at " << x << " * " << y << ": "
                  << lhs << " vs " << rhs << "\n";
        return 1;
      }
    }
  }
  for (const auto& a : conv.window(w)) {
    if (!(bext::ext_to_conv(bext::conv_to_ext(a, n), n) == a)) {
      std::cout << "round trip failed at " << a << "\n";
      return 1;
    }
    ++trips;
  }
  if (json)
    std::cout << ordered_json{{"ok", true}, {"pairs", pairs},
                              {"round_trips", trips}}
                     .dump()
              << "\n";
  else
    std::cout << "correspondence holds: " << pairs << " products, " << trips
              << " round trips\n";
  return 0;
}

// ---------------------------------------------------------- endo-verify ---

int run_endo_verify(const std::string& file, std::uint32_t n, std::uint64_t w,
                    bool json) {
  auto entries = bext::parse_conv_table_file(file, n);
  auto tab = bext::Endo<bext::ConvIso>::table(std::move(entries));
  bext::ConvSemigroup sgp{n};
  auto vr = bext::verify_endomorphism(sgp, tab, w);
  if (json) {
    ordered_json j{{"ok", vr.ok},
                   {"checked", vr.checked},
                   {"skipped", vr.skipped}};
    if (vr.witness)
      j["witness"] = {{"x", bext::show(vr.witness->first)},
                      {"y", bext::show(vr.witness->second)}};
    std::cout << j.dump() << "\n";
  } else if (vr.ok) {
    std::cout << "endomorphism: " << vr.checked << " pairs checked, "
              << vr.skipped << " skipped\n";
  } else {
    const auto& [x, y] = *vr.witness;
    std::cout << "not an endomorphism: images disagree on " << x << " * " << y
              << "\n";
  }
  return vr.ok ? 0 : 1;
}

// -------------------------------------------------------- endo-classify ---

int run_endo_classify(const std::string& file, std::uint32_t n, bool json) {
  auto entries = bext::parse_conv_table_file(file, n);
  auto tab = bext::Endo<bext::ConvIso>::table(std::move(entries));
  bext::ConvSemigroup sgp{n};
  bext::ClassifyOutcome out = bext::classify_injective(sgp, tab);
  if (std::holds_alternative<std::uint64_t>(out)) {
    std::uint64_t i0 = std::get<std::uint64_t>(out);
    if (json)
      std::cout << ordered_json{{"verdict", "shift"}, {"i0", i0}}.dump()
                << "\n";
    else
      std::cout << "shift by " << i0 << "\n";
    return 0;
  }
  const auto& v = std::get<bext::ClassifyViolation>(out);
  if (json)
    std::cout << ordered_json{{"verdict", "violation"},
                              {"kind", bext::to_string(v.kind)},
                              {"detail", v.detail}}
                     .dump()
              << "\n";
  else
    std::cout << "violation: " << bext::to_string(v.kind) << ": " << v.detail
              << "\n";
  return 1;
}

// --------------------------------------------------------------- chains ---

int run_chains(std::uint32_t n, std::uint64_t w, const std::string& dot_file,
               bool json) {
  auto chains = bext::maximal_chains(w, n);
  if (!dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) return usage_error("cannot write " + dot_file);
    out << bext::idempotent_hasse_dot(w, n);
  }
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& ch : chains) {
      ordered_json one = ordered_json::array();
      for (const auto& e : ch) one.push_back(bext::show(e));
      arr.push_back(std::move(one));
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& ch : chains) {
      for (std::size_t k = 0; k < ch.size(); ++k)
        std::cout << (k ? " < " : "") << ch[k];
      std::cout << "\n";
    }
  }
  return 0;
}

// --------------------------------------------------------- matrix-endos ---

int run_matrix_endos(std::uint32_t lambda, bool report, bool json) {
  bext::EndStructureReport rep = bext::end_structure_report(lambda);
  if (json) {
    ordered_json j{{"lambda", rep.lambda},
                   {"total", rep.total},
                   {"injective", rep.injective},
                   {"annihilating", rep.annihilating},
                   {"aut_order", rep.aut_order},
                   {"ok", rep.ok()}};
    if (report) {
      j["counts_match_formula"] = rep.counts_match_formula;
      j["partition_ok"] = rep.partition_ok;
      j["closed_under_composition"] = rep.closed_under_composition;
      j["right_zero_ok"] = rep.right_zero_ok;
      j["ideal_ok"] = rep.ideal_ok;
      j["minimal_ideal_ok"] = rep.minimal_ideal_ok;
      j["absorb_into_ok"] = rep.absorb_into_ok;
      j["transport_ok"] = rep.transport_ok;
      j["cancel_first_ok"] = rep.cancel_first_ok;
      j["cancel_second_ok"] = rep.cancel_second_ok;
      j["perm_correspondence_ok"] = rep.perm_correspondence_ok;
      j["note"] = rep.note;
    }
    std::cout << j.dump() << "\n";
    return report && !rep.ok() ? 1 : 0;
  }
  std::cout << rep.total << " endomorphisms (" << rep.injective
            << " injective, " << rep.annihilating << " annihilating)\n";
  if (!report) return 0;
  auto line = [](const char* what, bool ok) {
    std::cout << "  " << what << ": " << (ok ? "yes" : "NO") << "\n";
  };
  line("counts match lambda! + lambda + 1", rep.counts_match_formula);
  line("injective / annihilating partition", rep.partition_ok);
  line("closed under composition", rep.closed_under_composition);
  line("annihilators are a right-zero semigroup", rep.right_zero_ok);
  line("annihilators absorb on both sides", rep.ideal_ok);
  line("that ideal is the minimum one", rep.minimal_ideal_ok);
  line("e then a_x collapses to a_x", rep.absorb_into_ok);
  line("a_x then e transports the target", rep.transport_ok);
  line("injectives cancel when applied first", rep.cancel_first_ok);
  line("injectives cancel when applied last", rep.cancel_second_ok);
  line("injectives realize the permutations", rep.perm_correspondence_ok);
  std::cout << "  |Aut| = " << rep.aut_order << "\n";
  if (!rep.note.empty()) std::cout << "  note: " << rep.note << "\n";
  return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------- congruences ---

int run_congruences(std::uint32_t lambda, bool json) {
  bext::CongruenceReport rep = bext::congruence_freeness_check(lambda);
  if (json) {
    ordered_json j{{"lambda", rep.lambda},
                   {"congruence_free", rep.congruence_free},
                   {"count", rep.congruence_count}};
    if (rep.proper_witness) {
      ordered_json classes = ordered_json::array();
      for (const auto& cls : *rep.proper_witness) {
        ordered_json one = ordered_json::array();
        for (const auto& u : cls) one.push_back(bext::show(u));
        classes.push_back(std::move(one));
      }
      j["proper_witness"] = std::move(classes);
    }
    std::cout << j.dump() << "\n";
  } else if (rep.congruence_free) {
    std::cout << "congruence-free (" << rep.congruence_count
              << " congruences)\n";
    if (rep.lambda_one_flag)
      std::cout << "  (lambda = 1 has no off-diagonal pairs to identify)\n";
  } else {
    std::cout << "not congruence-free: " << rep.congruence_count
              << " congruences; a proper one identifies:\n";
    for (const auto& cls : *rep.proper_witness) {
      std::cout << "  {";
      for (std::size_t k = 0; k < cls.size(); ++k)
        std::cout << (k ? ", " : "") << cls[k];
      std::cout << "}\n";
    }
  }
  return rep.congruence_free ? 0 : 1;
}

// ---------------------------------------------------------------- suite ---

int run_suite(unsigned jobs, bool json) {
  auto results = bext::run_acceptance(jobs);
  bool all = true;
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      arr.push_back(ordered_json{{"id", r.id},
                                 {"passed", r.passed},
                                 {"name", r.name},
                                 {"detail", r.detail}});
    }
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& r : results) {
      all = all && r.passed;
      std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id
                << ": " << r.name << " [" << r.detail << "]\n";
    }
    std::cout << (all ? "all criteria hold" : "SUITE FAILED") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "windowed calculator for bicyclic extensions, convex order "
      "isomorphisms and matrix-unit endomorphism monoids"};
  app.require_subcommand(1);
  std::function<int()> action;

  MulOpts mo;
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  mul->add_option("lhs", mo.lhs, "left operand")->required();
  mul->add_option("rhs", mo.rhs, "right operand")->required();
  mul->add_option("--n", mo.n,
                  "initial-interval family bound (ext) or rank bound (conv)")
      ->check(CLI::Range(0u, 1000000u));
  mul->add_option("--family", mo.family_text,
                  "ambient family, e.g. \"{[0;0],[0;1],{}}\"");
  mul->add_option("--lambda", mo.lambda, "matrix-unit dimension")
      ->check(CLI::Range(1u, 65000u));
  mul->add_option("--semigroup", mo.semigroup,
                  "which semigroup a bare 0 belongs to")
      ->check(CLI::IsMember({"auto", "ext", "conv", "mu"}));
  mul->add_flag("--json", mo.json, "JSON output");
  mul->callback([&] {
    mo.has_n = mul->count("--n") > 0;
    mo.has_family = mul->count("--family") > 0;
    mo.has_lambda = mul->count("--lambda") > 0;
    action = [&] { return run_mul(mo); };
  });

  std::string fam_text;
  bool fam_json = false;
  auto* fam = app.add_subcommand(
      "family-check", "decide whether a family is omega-closed");
  fam->add_option("family", fam_text, "family of finite sets")->required();
  fam->add_flag("--json", fam_json, "JSON output");
  fam->callback(
      [&] { action = [&] { return run_family_check(fam_text, fam_json); }; });

  std::uint32_t iso_n = 1;
  std::uint64_t iso_w = 8;
  bool iso_json = false;
  auto* iso = app.add_subcommand(
      "iso-check",
      "check the rank-grading correspondence on a window");
  iso->add_option("--n", iso_n, "rank bound (>= 1)")
      ->required()
      ->check(CLI::Range(1u, 64u));
  iso->add_option("--window", iso_w, "index window")->required();
  iso->add_flag("--json", iso_json, "JSON output");
  iso->callback(
      [&] { action = [&] { return run_iso_check(iso_n, iso_w, iso_json); }; });

  std::string ev_file;
  std::uint32_t ev_n = 2;
  std::uint64_t ev_w = 8;
  bool ev_json = false;
  auto* ev = app.add_subcommand("endo-verify",
                                "verify a table file as an endomorphism");
  ev->add_option("--table", ev_file, "file of \"elem -> elem\" lines")
      ->required()
      ->check(CLI::ExistingFile);
  ev->add_option("--n", ev_n, "rank bound")->required()->check(
      CLI::Range(1u, 64u));
  ev->add_option("--window", ev_w, "index window")->required();
  ev->add_flag("--json", ev_json, "JSON output");
  ev->callback([&] {
    action = [&] { return run_endo_verify(ev_file, ev_n, ev_w, ev_json); };
  });

  std::string ec_file;
  std::uint32_t ec_n = 2;
  bool ec_json = false;
  auto* ec = app.add_subcommand(
      "endo-classify",
      "match an injective endomorphism table against an index shift");
  ec->add_option("--table", ec_file, "file of \"elem -> elem\" lines")
      ->required()
      ->check(CLI::ExistingFile);
  ec->add_option("--n", ec_n, "rank bound (>= 2)")->required()->check(
      CLI::Range(2u, 64u));
  ec->add_flag("--json", ec_json, "JSON output");
  ec->callback([&] {
    action = [&] { return run_endo_classify(ec_file, ec_n, ec_json); };
  });

  std::uint32_t ch_n = 2;
  std::uint64_t ch_w = 6;
  std::string ch_dot;
  bool ch_json = false;
  auto* ch = app.add_subcommand(
      "chains", "maximal chains of idempotents under the natural order");
  ch->add_option("--n", ch_n, "rank bound")->required()->check(
      CLI::Range(1u, 20u));
  ch->add_option("--window", ch_w, "domain window")->required();
  ch->add_option("--dot", ch_dot, "write the order diagram to this file");
  ch->add_flag("--json", ch_json, "JSON output");
  ch->callback([&] {
    action = [&] { return run_chains(ch_n, ch_w, ch_dot, ch_json); };
  });

  std::uint32_t me_lambda = 2;
  bool me_report = false, me_json = false;
  auto* me = app.add_subcommand("matrix-endos",
                                "endomorphisms of a matrix-unit semigroup");
  me->add_option("--lambda", me_lambda, "dimension (1..4)")
      ->required()
      ->check(CLI::Range(1u, 4u));
  me->add_flag("--report", me_report, "full structure report");
  me->add_flag("--json", me_json, "JSON output");
  me->callback([&] {
    action = [&] { return run_matrix_endos(me_lambda, me_report, me_json); };
  });

  std::uint32_t cg_lambda = 2;
  bool cg_json = false;
  auto* cg = app.add_subcommand("congruences",
                                "count congruences of a matrix-unit semigroup");
  cg->add_option("--lambda", cg_lambda, "dimension (1..6)")
      ->required()
      ->check(CLI::Range(1u, 6u));
  cg->add_flag("--json", cg_json, "JSON output");
  cg->callback(
      [&] { action = [&] { return run_congruences(cg_lambda, cg_json); }; });

  unsigned su_jobs = 1;
  bool su_json = false;
  auto* su = app.add_subcommand("suite", "run the full verification suite");
  su->add_option("--jobs", su_jobs, "worker threads")
      ->check(CLI::Range(1u, 64u));
  su->add_flag("--json", su_json, "JSON output");
  su->callback([&] { action = [&] { return run_suite(su_jobs, su_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : usage_error("no subcommand selected");
  } catch (const bext::ParseError& e) {
    return usage_error(e.what());
  } catch (const CLI::Error& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const bext::StructureError& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const bext::ArithmeticOverflow& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
