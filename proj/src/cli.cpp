#include "agtaut/cli.hpp"

#include "agtaut/gw.hpp"
#include "agtaut/isogeny.hpp"
#include "agtaut/nl_cycles.hpp"
#include "agtaut/nl_expression.hpp"
#include "agtaut/ring_oracle.hpp"
#include "agtaut/serialize.hpp"
#include "agtaut/verify.hpp"

#include <CLI11.hpp>

#include <functional>
#include <variant>

namespace agtaut::cli {

namespace {

// Thrown for internal cross-check failures reported with exit code 2.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LambdaPolynomial parse_polynomial(unsigned g, std::string const& text) {
  NLExpression e = NLExpression::parse(g, text);
  LambdaPolynomial p(g);
  for (auto const& t : e.terms()) {
    std::vector<unsigned> factors;
    for (auto const& s : t.factors) {
      auto const* lambda = std::get_if<LambdaSymbol>(&s);
      if (lambda == nullptr) {
        throw std::invalid_argument("ring polynomials may only contain L(..) factors, found " +
                                    symbol_str(s));
      }
      factors.insert(factors.end(), lambda->indices.begin(), lambda->indices.end());
    }
    p += LambdaPolynomial::product_of(g, factors, t.coeff);
  }
  return p;
}

Json matrix_json(Matrix const& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c).str());
    }
    rows.push_back(row);
  }
  return rows;
}

Json basis_json(std::vector<IndexSet> const& basis) {
  Json out = Json::array();
  for (auto s : basis) {
    out.push_back(set_indices(s));
  }
  return out;
}

class Driver {
 public:
  Driver(std::ostream& out) : out_(out) { build(); }

  CLI::App& app() { return app_; }

  int dispatch() {
    for (auto const& [sub, action] : actions_) {
      if (sub->parsed()) {
        return action();
      }
    }
    throw CLI::CallForHelp();
  }

 private:
  void emit(Json const& j, std::string const& text) {
    out_ << (json_ ? j.dump() : text) << '\n';
  }

  CLI::App* command(std::string const& name, std::string const& description,
                    std::function<int()> action, CLI::App* parent = nullptr) {
    CLI::App* sub = (parent ? parent : &app_)->add_subcommand(name, description);
    sub->add_flag("--json", json_, "Emit JSON instead of text");
    if (action) {
      actions_.emplace_back(sub, std::move(action));
    }
    return sub;
  }

  void add_genus(CLI::App* sub) {
    sub->add_option("--g", g_, "Genus")->required()->check(CLI::Range(1U, kMaxGenus));
  }
  void add_delta(CLI::App* sub) {
    sub->add_option("--delta", delta_, "Polarization type as a divisibility chain, e.g. 1,2,4")
        ->required();
  }

  void build() {
    app_.require_subcommand(1);

    auto* taut_nl_cmd = command("taut-nl", "Projection of the NL cycle of type delta", [this] {
      TautClass c = taut_nl(g_, PolarizationType::parse(delta_));
      emit(to_json(c), c.str());
      return kExitOk;
    });
    add_genus(taut_nl_cmd);
    add_delta(taut_nl_cmd);

    auto* tilde_cmd = command("taut-nl-tilde", "Projection of the NLt cycle of degree d", [this] {
      TautClass c = taut_nl_tilde(g_, d_);
      emit(to_json(c), c.str());
      return kExitOk;
    });
    add_genus(tilde_cmd);
    tilde_cmd->add_option("--d", d_, "Degree (0 allowed)")->required();

    auto* product_cmd = command("taut-product", "Projection of the product locus A_u x A_{g-u}", [this] {
      TautClass c = taut_product_cycle(g_, u_);
      emit(to_json(c), c.str());
      return kExitOk;
    });
    add_genus(product_cmd);
    product_cmd->add_option("--u", u_, "Dimension of the first factor (1 or 2)")->required();

    auto* eis_cmd = command("eisenstein", "q-expansion of E_2g", [this] {
      QSeries s = eisenstein_series(g_, order_);
      emit(to_json(s), s.str());
      return kExitOk;
    });
    add_genus(eis_cmd);
    eis_cmd->add_option("--order", order_, "Truncation order")->required();

    auto* reduce_cmd = command("ring-reduce", "Normal form of a lambda polynomial", [this] {
      LambdaPolynomial p = parse_polynomial(g_, poly_);
      TautClass c = reduce(p);
      if (oracle_) {
        TautClass o = oracle_reduce(p);
        if (o != c) {
          throw VerificationFailure("rewriting gives " + c.str() + ", oracle gives " + o.str());
        }
      }
      emit(to_json(c), c.str());
      return kExitOk;
    });
    add_genus(reduce_cmd);
    reduce_cmd->add_option("--poly", poly_, "Polynomial, e.g. \"2 * L(1,1,2) + L(3)\"")->required();
    reduce_cmd->add_flag("--oracle", oracle_, "Cross-check with the linear-algebra oracle");

    auto* pair_cmd = command("ring-pair", "Socle pairing of two classes, or a pairing matrix", [this] {
      return ring_pair();
    });
    add_genus(pair_cmd);
    auto* a_opt = pair_cmd->add_option("--a", poly_, "First polynomial");
    auto* b_opt = pair_cmd->add_option("--b", poly_b_, "Second polynomial");
    auto* k_opt = pair_cmd->add_option("--k", k_, "Degree of the pairing matrix rows");
    a_opt->needs(b_opt);
    b_opt->needs(a_opt);
    k_opt->excludes(a_opt)->excludes(b_opt);

    auto* phi_cmd = command("deg-phi", "Degree of phi_delta", [this] {
      PolarizationType delta = PolarizationType::parse(delta_);
      DegreeRoute route = parse_route(route_);
      DegreeResult r;
      switch (route) {
        case DegreeRoute::closed_form:
          r = deg_phi(g_, delta);
          break;
        case DegreeRoute::stratified:
          r = deg_phi_by_primes(g_, delta);
          break;
        case DegreeRoute::enumeration:
          if (g_ != 1 || delta.length() != 1) {
            throw std::invalid_argument("the enumeration route covers g = 1 only");
          }
          r = oracle_index(delta[0]);
          break;
      }
      emit(to_json(r), r.value.str());
      return kExitOk;
    });
    add_genus(phi_cmd);
    add_delta(phi_cmd);
    phi_cmd->add_option("--route", route_, "closed_form, stratified or enumeration");

    auto* pi_cmd = command("deg-pi", "Degree of pi_delta", [this] {
      DegreeResult r = deg_pi(g_, PolarizationType::parse(delta_));
      emit(to_json(r), r.value.str());
      return kExitOk;
    });
    add_genus(pi_cmd);
    add_delta(pi_cmd);

    auto* sp_cmd = command("sp-order", "Order of Sp_2g(Z/N)", [this] {
      DegreeRoute route = parse_route(route_);
      DegreeResult r;
      if (route == DegreeRoute::enumeration) {
        r = {Rational(n_ == 1 ? BigInt(1) : enumerate_sp_order(g_, n_)), route};
      } else if (route == DegreeRoute::closed_form) {
        r = {Rational(sp_order(g_, n_)), route};
      } else {
        throw std::invalid_argument("sp-order supports closed_form and enumeration");
      }
      emit(to_json(r), r.value.str());
      return kExitOk;
    });
    add_genus(sp_cmd);
    sp_cmd->add_option("--n", n_, "Modulus N")->required()->check(CLI::PositiveNumber);
    sp_cmd->add_option("--route", route_, "closed_form or enumeration");

    auto* gw_cmd = command("gw-predict", "Predicted tau_i invariant", [this] {
      GWPrediction p = predict_tau1(g_, d_);
      if (!integral_.empty()) {
        p.i = i_;
        p.insertion = "supplied";
        p.value = conjecture_prediction(g_, d_, i_, Rational::parse(integral_));
      } else {
        if (i_ != 1) {
          throw std::invalid_argument("--i other than 1 needs --integral");
        }
        Rational closed = gw_tau1_lambda(g_, d_);
        if (closed != p.value) {
          throw VerificationFailure("prediction " + p.value.str() + " != closed form " +
                                    closed.str());
        }
      }
      emit(to_json(p), p.value.str());
      return kExitOk;
    });
    add_genus(gw_cmd);
    gw_cmd->add_option("--d", d_, "Degree")->required();
    gw_cmd->add_option("--i", i_, "psi power");
    gw_cmd->add_option("--integral", integral_,
                       "int psi^i lambda_{g-1} Lambda as p/q; default is the tau_1 lambda_g "
                       "lambda_{g-2} case");

    auto* diag = app_.add_subcommand("diagnose", "Diagnostics");
    diag->require_subcommand(1);
    auto* comp_cmd = command("nl-composition",
                             "NL constant next to the composed degree formula",
                             [this] { return nl_composition(); }, diag);
    add_genus(comp_cmd);
    add_delta(comp_cmd);

    auto* verify_cmd = command("verify", "Run acceptance suites", [this] { return verify(); });
    auto* all_opt = verify_cmd->add_flag("--all", all_, "Run every suite, stop at the first failure");
    auto* suite_opt = verify_cmd->add_option("--suite", suites_, "Suite id or name (repeatable)");
    all_opt->excludes(suite_opt);

    auto* project_cmd = command("project", "Tautological projection of an NL expression", [this] {
      TautClass c = taut_projection(NLExpression::parse(g_, expr_));
      emit(to_json(c), c.str());
      return kExitOk;
    });
    add_genus(project_cmd);
    project_cmd->add_option("--expr", expr_, "Expression, e.g. \"3 * NL(2) + NLt(2)\"")->required();
  }

  int ring_pair() {
    if (!poly_.empty()) {
      TautClass a = reduce(parse_polynomial(g_, poly_));
      TautClass b = reduce(parse_polynomial(g_, poly_b_));
      Rational v = socle_pair(a, b);
      emit(Json{{"g", g_}, {"value", v.str()}}, v.str());
      return kExitOk;
    }
    if (k_ < 0) {
      throw std::invalid_argument("ring-pair needs --a and --b, or --k");
    }
    PairingMatrix m = pairing_matrix(g_, static_cast<unsigned>(k_));
    Rational det = m.entries.determinant();
    Json j{{"g", g_},
           {"k", m.k},
           {"rows", basis_json(m.row_basis)},
           {"columns", basis_json(m.column_basis)},
           {"entries", matrix_json(m.entries)},
           {"determinant", det.str()}};
    emit(j, m.entries.str() + "\ndet = " + det.str());
    return kExitOk;
  }

  int nl_composition() {
    PolarizationType delta = PolarizationType::parse(delta_);
    NlCompositionDiagnostic d = diagnose_nl_composition(g_, delta);
    Json j{{"g", g_},
           {"delta", delta.str()},
           {"displayed", d.displayed.str()},
           {"composed", d.composed.str()},
           {"ratio", d.ratio().str()},
           {"agree", d.agree()}};
    emit(j, "displayed " + d.displayed.str() + "\ncomposed  " + d.composed.str() + "\nratio     " +
                d.ratio().str() + "\n" + (d.agree() ? "agree" : "MISMATCH"));
    return kExitOk;
  }

  int verify() {
    std::vector<Suite const*> selected;
    if (all_ || suites_.empty()) {
      for (auto const& s : acceptance_suites()) {
        selected.push_back(&s);
      }
    } else {
      for (auto const& key : suites_) {
        selected.push_back(&find_suite(key));
      }
    }
    Json results = Json::array();
    bool ok = true;
    for (auto const* s : selected) {
      SuiteResult r = s->run();
      results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      if (!json_) {
        out_ << (r.pass ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
      }
      if (!r.pass) {
        ok = false;
        break;
      }
    }
    if (json_) {
      out_ << results.dump() << '\n';
    }
    return ok ? kExitOk : kExitVerification;
  }

  std::ostream& out_;
  CLI::App app_{"Exact computations in the tautological ring of A_g", "agtaut"};
  std::vector<std::pair<CLI::App*, std::function<int()>>> actions_;

  bool json_ = false;
  unsigned g_ = 0;
  std::string delta_;
  std::uint64_t d_ = 0;
  unsigned u_ = 0;
  unsigned order_ = 0;
  std::string poly_, poly_b_;
  bool oracle_ = false;
  long k_ = -1;
  std::string route_ = "closed_form";
  std::uint64_t n_ = 1;
  unsigned i_ = 1;
  std::string integral_;
  bool all_ = false;
  std::vector<std::string> suites_;
  std::string expr_;
};

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Driver driver(out);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    driver.app().parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << driver.app().help();
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    return driver.dispatch();
  } catch (CLI::CallForHelp const&) {
    out << driver.app().help();
    return kExitOk;
  } catch (VerificationFailure const& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (std::logic_error const& e) {
    // invalid_argument and domain_error derive from logic_error; the rest
    // are failed internal cross-checks.
    if (dynamic_cast<std::invalid_argument const*>(&e) || dynamic_cast<std::domain_error const*>(&e) ||
        dynamic_cast<std::out_of_range const*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace agtaut::cli
