// Acceptance run: one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <thread>

#include "dmult/error.hpp"
#include "dmult/verify.hpp"

using namespace dmult;

namespace {

struct Line {
  int id;
  std::string title;
  bool ok = true;
  std::vector<std::string> notes;
};

std::string run_capture(const std::string& args, int& code) {
  const std::string cmd = std::string(DMULT_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string tally_note(const std::string& type, const CheckTally* t) {
  std::ostringstream os;
  if (!t) return type + ": missing";
  os << type << " " << t->name << " " << (t->checked - t->failed) << "/" << t->checked;
  for (const auto& f : t->failures) os << " [" << f << "]";
  return os.str();
}

void absorb(Line& line, const std::string& type, const VerifyReport& rep, const std::vector<std::string>& names) {
  for (const auto& name : names) {
    const CheckTally* t = rep.find(name);
    if (!t || t->failed > 0) line.ok = false;
    line.notes.push_back(tally_note(type, t));
  }
  if (const CheckTally* e = rep.find("errors")) {
    line.ok = false;
    line.notes.push_back(tally_note(type, e));
  }
}

}  // namespace

int main() {
  const int jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto start = std::chrono::steady_clock::now();
  std::vector<Line> lines = {
      {1, "central identity chi = lim_t lim_q E", true, {}},
      {2, "both limits finite, E(t) in Z[t^{-1}]", true, {}},
      {3, "length identity and 2<lambda,rho> bound on [-4,4]^n", true, {}},
      {4, "n integral and nonnegative", true, {}},
      {5, "volume polynomial leading coefficient and sample counts", true, {}},
      {6, "denominator identity", true, {}},
      {7, "antidominant characters match the Freudenthal oracle", true, {}},
      {8, "Hecke relations, commuting triangular Y", true, {}},
      {9, "triangularity of E and m_{lambda,lambda} = 1", true, {}},
      {10, "byte-identical repeated output", true, {}},
  };

  const std::vector<std::pair<std::string, int>> balls = {{"A1", 10}, {"A2", 10}, {"B2", 10}, {"A3", 6}, {"G2", 6}};
  double identity_seconds = 0;
  for (const auto& [type, radius] : balls) {
    auto ctx = make_context(parse_cartan_type(type));
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    try {
      rep = run_verify(*ctx, radius, jobs);
    } catch (const Error& e) {
      for (auto& l : lines)
        if (l.id != 3 && l.id != 10) {
          l.ok = false;
          l.notes.push_back(type + ": " + e.what());
        }
      continue;
    }
    identity_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string tag = type + "(r" + std::to_string(radius) + ", " + std::to_string(rep.weights) + " weights)";
    absorb(lines[0], tag, rep, {"central_identity"});
    absorb(lines[1], tag, rep, {"limit_q_finite", "limit_t_nonpositive"});
    absorb(lines[3], tag, rep, {"n_integral", "n_nonnegative"});
    lines[3].notes.push_back(type + " pairs with n = 0: " + std::to_string(rep.zero_dimension_pairs.size()));
    for (const auto& z : rep.zero_dimension_pairs) lines[3].notes.push_back("  n = 0 at " + type + " " + z);
    absorb(lines[4], tag, rep, {"degree_bound", "leading_coefficient", "sample_counts"});
    absorb(lines[5], tag, rep, {"denominator_identity"});
    absorb(lines[6], tag, rep, {"oracle_agreement"});
    absorb(lines[7], tag, rep, {"hecke_quadratic", "hecke_braid", "hecke_span", "y_commute", "y_triangular"});
    absorb(lines[8], tag, rep, {"e_triangular", "e_monic", "m_lambda_lambda"});

    if (type == "A1") {
      bool strings = true;
      for (int m = 0; m <= 10; ++m) {
        Weight l{-m};
        CharSeries chi = ctx->dem.character(l).series;
        strings = strings && chi.size() == static_cast<std::size_t>(m + 1);
        for (int k = -m; k <= m; k += 2) strings = strings && chi.coefficient(Weight{k}) == 1;
      }
      lines[6].ok = lines[6].ok && strings;
      lines[6].notes.push_back(std::string("A1 strings -m..m for lambda = -m, m <= 10: ") + (strings ? "ok" : "wrong"));
    }
    if (type == "A2") {
      const long zero = ctx->dem.character(Weight{-1, -1}).series.coefficient(Weight{0, 0});
      lines[6].ok = lines[6].ok && zero == 2;
      lines[6].notes.push_back("A2 adjoint zero weight multiplicity " + std::to_string(zero));
    }
  }
  lines[0].notes.push_back("time " + std::to_string(static_cast<int>(identity_seconds)) + " s (limit 600 s)");
  if (identity_seconds > 600) lines[0].ok = false;

  // 3 and the Hecke relations on every supported type.
  for (const auto& t : supported_types()) {
    auto ctx = make_context(t);
    long checked = 0, failed = 0;
    std::vector<int> x(t.rank, -4);
    while (true) {
      Weight w = Weight::zero(t.rank);
      for (int i = 0; i < t.rank; ++i) w[i] = x[i];
      for (bool ok : {length_identity_holds(ctx->group, w), rho_inequality_holds(ctx->group, w)}) {
        ++checked;
        if (!ok) {
          ++failed;
          if (failed <= 5) lines[2].notes.push_back(t.name() + " fails at " + w.to_string());
        }
      }
      int i = 0;
      while (i < t.rank && ++x[i] > 4) x[i++] = -4;
      if (i == t.rank) break;
    }
    if (failed) lines[2].ok = false;
    lines[2].notes.push_back(t.name() + " " + std::to_string(checked - failed) + "/" + std::to_string(checked));

    HeckeReport h = check_hecke_axioms(ctx->mac, 60, 0xacce97ULL + static_cast<std::uint64_t>(t.rank));
    if (h.quadratic.failed || h.braid.failed) lines[7].ok = false;
    lines[7].notes.push_back(t.name() + " on 60 random monomials: quadratic " +
                             std::to_string(h.quadratic.checked - h.quadratic.failed) + "/" +
                             std::to_string(h.quadratic.checked) + ", braid " +
                             std::to_string(h.braid.checked - h.braid.failed) + "/" + std::to_string(h.braid.checked));
  }

  // 10: repeated runs, and thread count does not change the bytes.
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"verify --type A2 --radius 6 --format json --jobs 4", "verify --type A2 --radius 6 --format json --jobs 1"},
      {"verify --type B2 --radius 5 --jobs 3", "verify --type B2 --radius 5 --jobs 3"},
      {"predict --type B2 --lambda -2,1 --all-mu --format csv --jobs 4",
       "predict --type B2 --lambda -2,1 --all-mu --format csv --jobs 1"},
      {"predict --type G2 --lambda -1,0 --all-mu --format json --jobs 2",
       "predict --type G2 --lambda -1,0 --all-mu --format json --jobs 2"},
  };
  for (const auto& [a, b] : runs) {
    int ca = 0, cb = 0;
    const std::string oa = run_capture(a, ca), ob = run_capture(b, cb);
    const bool same = ca == 0 && cb == 0 && oa == ob && !oa.empty();
    if (!same) lines[9].ok = false;
    lines[9].notes.push_back((same ? "identical: " : "DIFFERENT: ") + a + "  vs  " + b);
  }

  bool all = true;
  for (const auto& l : lines) {
    std::cout << "criterion " << l.id << ": " << (l.ok ? "PASS" : "FAIL") << "  " << l.title << "\n";
    for (const auto& n : l.notes) std::cout << "    " << n << "\n";
    all = all && l.ok;
  }
  std::cout << "total time "
            << static_cast<int>(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count())
            << " s\n";
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? 0 : 1;
}
