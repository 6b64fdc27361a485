// Command-line front end: one subcommand per library operation, JSON file
// inputs, deterministic JSON reports on stdout, diagnostics on stderr.
// Exit codes: 0 = property holds / computation succeeded, 1 = property
// fails (witness in the report), 2 = input or precondition error.

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "rbs/algebra.hpp"
#include "rbs/cohomology.hpp"
#include "rbs/deformation.hpp"
#include "rbs/io.hpp"
#include "rbs/rota_baxter.hpp"
#include "rbs/search.hpp"
#include "rbs/witt.hpp"

namespace {

using rbs::Rational;
using json = nlohmann::json;
using K = Rational;

rbs::LeibnizAlgebra<K> load_algebra(const std::string& path) {
  return rbs::io::algebra_from_json(rbs::io::load_file(path), path);
}

rbs::Representation<K> load_rep(const std::string& path, std::size_t dimg) {
  return rbs::io::representation_from_json(rbs::io::load_file(path), dimg, path);
}

rbs::RbsPair<K> load_pair(const std::string& path) {
  return rbs::io::pair_from_json(rbs::io::load_file(path), path);
}

rbs::BilinearForm<K> load_form(const std::string& path) {
  return rbs::io::form_from_json(rbs::io::load_file(path), path);
}

rbs::Dialgebra<K> load_dialgebra(const std::string& path) {
  return rbs::io::dialgebra_from_json(rbs::io::load_file(path), path);
}

rbs::TruncatedDeformation<K> load_deformation(const std::string& path) {
  return rbs::io::deformation_from_json(rbs::io::load_file(path), path);
}

rbs::Matrix<K> load_endomap(const std::string& path) {
  return rbs::io::endomap_from_json(rbs::io::load_file(path), path);
}

// Emits the report and converts it to an exit code.  `holds` drives the
// 0/1 distinction; value-producing commands pass std::nullopt.
int emit(const std::string& command, std::optional<bool> holds, json data) {
  json rep;
  rep["command"] = command;
  rep["schema_version"] = "1";
  if (holds.has_value()) rep["holds"] = *holds;
  rep["data"] = std::move(data);
  std::cout << rep.dump(2) << "\n";
  return holds.has_value() && !*holds ? 1 : 0;
}

json check_data(const rbs::CheckReport<K>& r) {
  json d = json::object();
  if (r.witness) d["witness"] = rbs::io::witness_to_json(*r.witness);
  return d;
}

// Option storage shared between a subcommand's parser and its callback.
struct Opts {
  std::string a, b, c, d, e;
  std::string weight = "0";
  std::string q;
  std::string budget;
  int window = 0;
  int degree = 1;
  long long target = -1;
  long long field = 2;
  unsigned workers = 1;
  bool quotient0 = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact checker and deformation toolkit for bracket algebras, module "
      "actions, and coupled pair identities.  All arithmetic is exact."};
  app.require_subcommand(1);

  int code = 0;
  auto sub = [&](const char* name, const char* desc) {
    auto o = std::make_shared<Opts>();
    CLI::App* c = app.add_subcommand(name, desc);
    return std::make_pair(c, o);
  };
  auto run = [&](CLI::App* c, std::function<int()> fn) {
    c->callback([&code, fn = std::move(fn)] { code = fn(); });
  };

  {
    auto [c, o] = sub("check-leibniz", "Verify the left Leibniz identity of an algebra file");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    run(c, [o] {
      auto r = rbs::check_leibniz(load_algebra(o->a));
      return emit("check-leibniz", r.holds, check_data(r));
    });
  }
  {
    auto [c, o] = sub("check-rep", "Verify the three module-action axioms");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto r = rbs::check_representation(alg, load_rep(o->b, alg.dim));
      return emit("check-rep", r.holds, check_data(r));
    });
  }
  {
    auto [c, o] = sub("check-quadratic", "Verify nondegeneracy and invariance of a skew form");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("form", o->b, "bilinear form JSON file")->required();
    run(c, [o] {
      auto r = rbs::quadratic_structure(load_algebra(o->a), load_form(o->b));
      json d;
      d["nondegenerate"] = r.nondegenerate;
      d["invariant"] = r.invariant;
      if (r.witness) d["witness"] = rbs::io::witness_to_json(*r.witness);
      if (r.iso) d["iso"] = rbs::io::matrix_to_json(*r.iso);
      return emit("check-quadratic", r.holds, std::move(d));
    });
  }
  {
    auto [c, o] = sub("check-dialgebra", "Verify the five two-product compatibility axioms");
    c->add_option("dialgebra", o->a, "dialgebra JSON file")->required();
    run(c, [o] {
      auto r = rbs::check_dialgebra(load_dialgebra(o->a));
      return emit("check-dialgebra", r.holds, check_data(r));
    });
  }
  {
    auto [c, o] = sub("check-rbs", "Verify the coupled pair identities for (R, S)");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("pair", o->c, "pair JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto r = rbs::check_rbs(alg, load_rep(o->b, alg.dim), load_pair(o->c));
      return emit("check-rbs", r.holds, check_data(r));
    });
  }
  {
    auto [c, o] = sub("check-nijenhuis", "Verify the deformed-bracket identity of an endomorphism");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("endomap", o->b, "endomorphism JSON file")->required();
    run(c, [o] {
      auto r = rbs::nijenhuis_check(load_algebra(o->a), load_endomap(o->b));
      return emit("check-nijenhuis", r.holds, check_data(r));
    });
  }
  {
    auto [c, o] = sub("check-1cocycle",
                      "Verify the invertible two-map cocycle system (maps in the R/S slots)");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("maps", o->c, "pair-format JSON file holding the two maps g -> V")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto maps = load_pair(o->c);
      auto r = rbs::check_1cocycle_system(alg, load_rep(o->b, alg.dim), maps.R, maps.S);
      return emit("check-1cocycle", r.holds, check_data(r));
    });
  }
  {
    auto [c, o] = sub("transport", "Transport a dual-side pair through a quadratic form");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("form", o->b, "bilinear form JSON file")->required();
    c->add_option("pair", o->c, "pair JSON file (maps on the dual side)")->required();
    run(c, [o] {
      auto out = rbs::quadratic_transport(load_algebra(o->a), load_form(o->b), load_pair(o->c));
      return emit("transport", std::nullopt, json{{"pair", rbs::io::pair_to_json(out)}});
    });
  }
  {
    auto [c, o] = sub("weighted", "Check the weighted operator identity and derive its two systems");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("endomap", o->b, "endomorphism JSON file")->required();
    c->add_option("--weight", o->weight, "weight (rational, default 0)");
    run(c, [o] {
      auto r = rbs::weighted_to_systems(load_algebra(o->a), load_endomap(o->b),
                                        rbs::rational_from_string(o->weight));
      json d;
      if (r.witness) d["witness"] = rbs::io::witness_to_json(*r.witness);
      if (r.systems) {
        d["systems"] = json::array(
            {rbs::io::pair_to_json(r.systems->first), rbs::io::pair_to_json(r.systems->second)});
      }
      return emit("weighted", r.is_weighted, std::move(d));
    });
  }
  {
    auto [c, o] = sub("twisted", "Check the morphism-twisted operator identity");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("sigma", o->b, "twisting endomorphism JSON file")->required();
    c->add_option("endomap", o->c, "operator endomorphism JSON file")->required();
    run(c, [o] {
      auto r = rbs::twisted_to_system(load_algebra(o->a), load_endomap(o->b), load_endomap(o->c));
      json d;
      d["sigma_is_morphism"] = r.sigma_is_morphism;
      d["is_twisted_rb"] = r.is_twisted_rb;
      if (r.witness) d["witness"] = rbs::io::witness_to_json(*r.witness);
      if (r.system) d["system"] = rbs::io::pair_to_json(*r.system);
      return emit("twisted", r.sigma_is_morphism && r.is_twisted_rb, std::move(d));
    });
  }
  {
    auto [c, o] = sub("diff-rb", "Check the differential-operator triple of conditions");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("endomap", o->b, "operator endomorphism JSON file")->required();
    c->add_option("derivation", o->c, "derivation endomorphism JSON file")->required();
    c->add_option("--weight", o->weight, "weight (rational, default 0)");
    run(c, [o] {
      auto r = rbs::differential_rb_check(load_algebra(o->a), load_endomap(o->b), load_endomap(o->c),
                                          rbs::rational_from_string(o->weight));
      json d{{"dr1", r.dr1}, {"dr2", r.dr2}, {"dr3", r.dr3}};
      return emit("diff-rb", r.holds(), std::move(d));
    });
  }
  {
    auto [c, o] = sub("witt", "Window check of the twisted operator on the graded Witt bracket");
    c->add_option("--q", o->q, "parameter q (rational)")->required();
    c->add_option("--window", o->window, "index window bound (>= 2)")->required();
    run(c, [o] {
      auto r = rbs::witt_window_check(rbs::rational_from_string(o->q), o->window);
      json d;
      d["checked_pairs"] = r.checked_pairs;
      d["skipped_pairs"] = r.skipped_pairs;
      if (r.witness) d["witness"] = json::array({r.witness->first, r.witness->second});
      if (r.residual) d["residual"] = rbs::rational_to_string(*r.residual);
      return emit("witt", r.holds, std::move(d));
    });
  }
  {
    auto [c, o] = sub("dialgebra-rb", "Check the two-product operator identity and its induced bracket");
    c->add_option("dialgebra", o->a, "dialgebra JSON file")->required();
    c->add_option("endomap", o->b, "endomorphism JSON file")->required();
    run(c, [o] {
      auto r = rbs::dialgebra_rb(load_dialgebra(o->a), load_endomap(o->b));
      json d;
      d["leibniz_rb_holds"] = r.leibniz_rb_holds;
      if (r.witness) d["witness"] = rbs::io::witness_to_json(*r.witness);
      return emit("dialgebra-rb", r.is_dialgebra_rb, std::move(d));
    });
  }
  {
    auto [c, o] = sub("pseudotwistor", "Build T and its companion from an operator and check the diagrams");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("endomap", o->b, "operator endomorphism JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto [t, tau] = rbs::pseudotwistor_from_rb(alg, load_endomap(o->b));
      auto r = rbs::check_weak_pseudotwistor(alg, t, tau);
      json d{{"flip_compat", r.flip_compat},
             {"left_diagram", r.left_diagram},
             {"right_diagram", r.right_diagram}};
      return emit("pseudotwistor", r.holds(), std::move(d));
    });
  }
  {
    auto [c, o] = sub("mc-check", "Verify that the pair's self-bracket vanishes");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("pair", o->c, "pair JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto r = rbs::mc_check(alg, load_rep(o->b, alg.dim), load_pair(o->c));
      return emit("mc-check", r.holds, check_data(r));
    });
  }
  {
    auto [c, o] = sub("derived-bracket", "Bracket of two degree-1 elements, as a degree-2 element");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("pair1", o->c, "first pair JSON file")->required();
    c->add_option("pair2", o->d, "second pair JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto rep = load_rep(o->b, alg.dim);
      auto p1 = load_pair(o->c), p2 = load_pair(o->d);
      rbs::require_pair_dims(alg, rep, p1);
      rbs::require_pair_dims(alg, rep, p2);
      auto out = rbs::derived_bracket(alg, rep, rbs::Cochain<K>::from_pair(p1),
                                      rbs::Cochain<K>::from_pair(p2));
      return emit("derived-bracket", std::nullopt, json{{"cochain", rbs::io::cochain_to_json(out)}});
    });
  }
  {
    auto [c, o] = sub("differential", "Apply the differential of a base pair to a degree-1 element");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("base", o->c, "base pair JSON file (must pass check-rbs)")->required();
    c->add_option("pair", o->d, "pair JSON file for the degree-1 element")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto rep = load_rep(o->b, alg.dim);
      auto base = load_pair(o->c);
      auto p = load_pair(o->d);
      rbs::require_pair_dims(alg, rep, base);
      rbs::require_pair_dims(alg, rep, p);
      auto out = rbs::differential_apply(alg, rep, base, rbs::Cochain<K>::from_pair(p));
      return emit("differential", std::nullopt, json{{"cochain", rbs::io::cochain_to_json(out)}});
    });
  }
  {
    auto [c, o] = sub("cohomology", "Kernel, image, and quotient dimensions at a degree");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("base", o->c, "base pair JSON file (must pass check-rbs)")->required();
    c->add_option("--degree", o->degree, "cochain degree (>= 1)")->required();
    c->add_flag("--quotient-degree0", o->quotient0,
                "at degree 1, also quotient by the image of the degree-0 map");
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto rep = load_rep(o->b, alg.dim);
      auto base = load_pair(o->c);
      rbs::require_pair_dims(alg, rep, base);
      if (o->degree < 1) throw rbs::input_error("--degree must be at least 1");
      auto dims = rbs::cohomology_dims(alg, rep, base, static_cast<std::size_t>(o->degree),
                                       o->quotient0);
      json d{{"dim_Z", dims.dim_z}, {"dim_B", dims.dim_b}, {"dim_H", dims.dim_h}};
      return emit("cohomology", std::nullopt, std::move(d));
    });
  }
  {
    auto [c, o] = sub("order-check", "Coefficientwise identity check of a truncated deformation");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("deformation", o->c, "deformation JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto r = rbs::check_order_n(alg, load_rep(o->b, alg.dim), load_deformation(o->c));
      json d = json::object();
      if (r.failing_order) d["failing_order"] = *r.failing_order;
      if (r.witness) d["witness"] = rbs::io::witness_to_json(*r.witness);
      return emit("order-check", r.holds, std::move(d));
    });
  }
  {
    auto [c, o] = sub("infinitesimal", "Degree-1 coefficient of a valid deformation, with cocycle check");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("deformation", o->c, "deformation JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto r = rbs::infinitesimal(alg, load_rep(o->b, alg.dim), load_deformation(o->c));
      json d{{"cochain", rbs::io::cochain_to_json(r.cochain)}, {"is_cocycle", r.is_cocycle}};
      return emit("infinitesimal", r.is_cocycle, std::move(d));
    });
  }
  {
    auto [c, o] = sub("equivalence", "Decide degree-1 equivalence of two cocycles over a base");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("base", o->c, "base pair JSON file (must pass check-rbs)")->required();
    c->add_option("cocycle1", o->d, "first cocycle as a pair JSON file")->required();
    c->add_option("cocycle2", o->e, "second cocycle as a pair JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto rep = load_rep(o->b, alg.dim);
      auto r = rbs::equivalence_solve(alg, rep, load_pair(o->c),
                                      rbs::Cochain<K>::from_pair(load_pair(o->d)),
                                      rbs::Cochain<K>::from_pair(load_pair(o->e)));
      json d = json::object();
      if (r.witness) {
        d["witness"] = json{{"x", rbs::io::vec_to_json(r.witness->first)},
                            {"y", rbs::io::vec_to_json(r.witness->second)}};
      }
      return emit("equivalence", r.equivalent_at_degree1, std::move(d));
    });
  }
  {
    auto [c, o] = sub("obstruction", "Obstruction element of a valid deformation, with cocycle check");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("deformation", o->c, "deformation JSON file")->required();
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto r = rbs::obstruction(alg, load_rep(o->b, alg.dim), load_deformation(o->c));
      json d{{"cochain", rbs::io::cochain_to_json(r.cochain)}, {"is_2cocycle", r.is_2cocycle}};
      return emit("obstruction", r.is_2cocycle, std::move(d));
    });
  }
  {
    auto [c, o] = sub("extend", "Extend a deformation order by order toward a target");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("deformation", o->c, "deformation JSON file")->required();
    c->add_option("--target", o->target, "target order (default: current order + 1)");
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto rep = load_rep(o->b, alg.dim);
      auto def = load_deformation(o->c);
      std::size_t target = o->target < 0 ? def.order() + 1 : static_cast<std::size_t>(o->target);
      auto r = rbs::extend_to_order(alg, rep, def, target);
      json coeffs = json::array();
      for (const auto& p : r.final.coeffs) coeffs.push_back(rbs::io::pair_to_json(p));
      json d{{"reached", r.reached},
             {"final", json{{"order", r.final.order()}, {"coeffs", std::move(coeffs)}}}};
      return emit("extend", r.reached == target, std::move(d));
    });
  }
  {
    auto [c, o] = sub("search", "Exhaustively list all pairs over a prime field passing check-rbs");
    c->add_option("algebra", o->a, "algebra JSON file")->required();
    c->add_option("representation", o->b, "representation JSON file")->required();
    c->add_option("--field", o->field, "prime modulus p")->required();
    c->add_option("--budget", o->budget, "max candidate count (overrides RBS_BUDGET)");
    c->add_option("--workers", o->workers, "worker threads (default 1; output independent of this)");
    run(c, [o] {
      auto alg = load_algebra(o->a);
      auto rep = load_rep(o->b, alg.dim);
      rbs::Int budget(rbs::kDefaultSearchBudget);
      if (const char* env = std::getenv("RBS_BUDGET"); env && *env) budget = rbs::Int(env);
      if (!o->budget.empty()) budget = rbs::Int(o->budget);
      auto pairs = rbs::search_rbs_mod_p(alg, rep, o->field, budget, o->workers);
      json list = json::array();
      for (const auto& p : pairs) list.push_back(rbs::io::pair_to_json(p));
      json d{{"modulus", o->field}, {"count", pairs.size()}, {"pairs", std::move(list)}};
      return emit("search", std::nullopt, std::move(d));
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const rbs::budget_error& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "input"}, {"required_budget", e.required.str()}}
                     .dump(2)
              << "\n";
    return 2;
  } catch (const rbs::precondition_error& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "precondition"}}.dump(2) << "\n";
    return 2;
  } catch (const rbs::input_error& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "input"}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"kind", "internal"}}.dump(2) << "\n";
    return 2;
  }
  return code;
}
