// Command-line front end: characters, Macdonald polynomials, prediction
// tables and the verification suite.
#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "dmult/error.hpp"
#include "dmult/render.hpp"

namespace {

using namespace dmult;

struct Common {
  std::string type;
  std::string format = "text";
  std::string out;
  int jobs = 1;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--type", c.type, "Cartan type (A1..A4, B2, B3, C3, D4, G2)")->required();
  sub->add_option("--format", c.format, "json, csv or text")->default_val("text");
  sub->add_option("--out", c.out, "output file (default: standard output)");
  sub->add_option("--jobs", c.jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
}

Weight parse_for(const RootSystem& rs, const std::string& s) {
  Weight w = parse_weight(s);
  if (w.rank() != rs.rank())
    throw ParseError("weight '" + s + "' has " + std::to_string(w.rank()) + " coordinates, type " +
                     rs.cartan_type().name() + " needs " + std::to_string(rs.rank()));
  return w;
}

void require_budget(const AffineWeylGroup& g, const Weight& lambda) {
  const int len = g.orbit_data(lambda).length_w();
  if (len > kDefaultLowerSetBudget)
    throw BudgetError("l(w_lambda) = " + std::to_string(len) + " for " + lambda.to_string() +
                      " exceeds the budget " + std::to_string(kDefaultLowerSetBudget));
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + c.out + "'");
  f << text;
}

// Runs fn(k) for k in [0, n) on up to `jobs` threads; results are stored by
// index so ordering is independent of scheduling.
template <class F>
void fan_out(std::size_t n, int jobs, F&& fn) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errs(n);
  auto worker = [&] {
    for (std::size_t k; (k = next++) < n;) {
      try {
        fn(k);
      } catch (...) {
        errs[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < std::min<int>(jobs, static_cast<int>(n)); ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

int exit_code_for(const Error& e) { return static_cast<int>(e.kind()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure weight multiplicities via Demazure operators and Macdonald polynomial limits"};
  app.require_subcommand(1);
  app.allow_extras(false);

  Common c_char, c_mac, c_pred, c_ver;
  std::string weight_char, weight_mac, stage = "t", lambda_s, mu_s;
  bool all_mu = false, irreducible = false;
  int radius = 8;

  auto* s_char = app.add_subcommand("char", "Demazure character of a weight");
  add_common(s_char, c_char);
  s_char->add_option("--weight", weight_char, "weight in fundamental coordinates, e.g. -1,2")->required();

  auto* s_mac = app.add_subcommand("macdonald", "nonsymmetric Macdonald polynomial and its limits");
  add_common(s_mac, c_mac);
  s_mac->add_option("--weight", weight_mac, "weight in fundamental coordinates")->required();
  s_mac->add_option("--stage", stage, "qt: E(q,t), t: q -> infinity, char: then t -> infinity")
      ->check(CLI::IsMember({"qt", "t", "char"}))
      ->default_val("t");

  auto* s_pred = app.add_subcommand("predict", "multiplicity, dimension and volume records");
  add_common(s_pred, c_pred);
  s_pred->add_option("--lambda", lambda_s, "weight lambda (dominant with --irreducible)")->required();
  auto* o_mu = s_pred->add_option("--mu", mu_s, "weight mu");
  auto* o_all = s_pred->add_flag("--all-mu", all_mu, "every mu below lambda");
  o_mu->excludes(o_all);
  s_pred->add_flag("--irreducible", irreducible, "report mu in V_lambda for dominant lambda");

  auto* s_ver = app.add_subcommand("verify", "run every invariant over a ball of weights");
  add_common(s_ver, c_ver);
  s_ver->add_option("--radius", radius, "maximum l(tau_lambda)")->default_val(8);

  // Weight arguments such as "-1,2" look like options; attach them to the
  // preceding flag so the parser keeps them as values.
  std::vector<std::string> args(argv + 1, argv + argc);
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    const std::string& a = args[i];
    if ((a == "--weight" || a == "--lambda" || a == "--mu") && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) != 0)) {
      args[i] = a + "=" + args[i + 1];
      args.erase(args.begin() + static_cast<long>(i) + 1);
    }
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::Parse);
  }

  try {
    if (*s_char) {
      Format f = parse_format(c_char.format);
      auto ctx = make_context(parse_cartan_type(c_char.type));
      Weight lambda = parse_for(ctx->roots, weight_char);
      require_budget(ctx->group, lambda);
      emit(c_char, render_character(ctx->group, ctx->dem.character(lambda).series, f));
    } else if (*s_mac) {
      Format f = parse_format(c_mac.format);
      auto ctx = make_context(parse_cartan_type(c_mac.type));
      Weight lambda = parse_for(ctx->roots, weight_mac);
      require_budget(ctx->group, lambda);
      if (stage == "qt") {
        emit(c_mac, render_e_qt(ctx->group, lambda, ctx->mac.macdonald_e(lambda).series, f));
      } else if (stage == "t") {
        emit(c_mac, render_e_t(ctx->group, lambda, ctx->mac.e_limit_q(lambda), f));
      } else {
        emit(c_mac, render_character(ctx->group, limit_t_series(ctx->mac.e_limit_q(lambda)), f));
      }
    } else if (*s_pred) {
      Format f = parse_format(c_pred.format);
      auto ctx = make_context(parse_cartan_type(c_pred.type));
      Weight lambda = parse_for(ctx->roots, lambda_s);
      if (!all_mu && mu_s.empty()) throw ParseError("predict needs --mu or --all-mu");
      std::vector<Weight> mus;
      Weight target = lambda;
      if (irreducible) {
        if (!ctx->roots.is_dominant(lambda)) throw DomainError(lambda.to_string() + " is not dominant");
        target = ctx->group.longest()(lambda);
      }
      require_budget(ctx->group, target);
      if (all_mu) {
        mus = irreducible ? display_order(ctx->group, ctx->dem.character(target).series.support())
                          : ctx->group.ordered_lower_set(target);
      } else {
        mus.push_back(parse_for(ctx->roots, mu_s));
      }
      if (!irreducible && !all_mu && !ctx->group.bruhat_leq_weights(mus[0], lambda))
        throw DomainError(mus[0].to_string() + " is not below " + lambda.to_string() + " in the Bruhat order");
      ctx->mac.e_limit_q(target);  // shared by every record
      std::vector<PredictionRecord> recs(mus.size());
      fan_out(mus.size(), c_pred.jobs, [&](std::size_t k) {
        recs[k] = irreducible ? ctx->geo.predict_irreducible(lambda, mus[k]) : ctx->geo.predict(lambda, mus[k]);
      });
      emit(c_pred, render_predictions(ctx->roots.cartan_type().name(), recs, f));
    } else if (*s_ver) {
      Format f = parse_format(c_ver.format);
      auto ctx = make_context(parse_cartan_type(c_ver.type));
      VerifyReport rep = run_verify(*ctx, radius, c_ver.jobs);
      emit(c_ver, render_verify(rep, f));
      if (!rep.ok()) return static_cast<int>(ErrorKind::Internal);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Internal);
  }
  return 0;
}
