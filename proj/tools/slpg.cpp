// slpg: exact strong-Lefschetz toolkit for spanning-tree polynomials of
// graphs.  Subcommands: check, screen, verify, reconstruct, hilbert.
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "slp/apolarity.hpp"
#include "slp/certificate_io.hpp"
#include "slp/fixtures.hpp"
#include "slp/lefschetz.hpp"

using json = nlohmann::ordered_json;
using namespace slp;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InputOptions {
  std::string fixture;
  std::string graph_file;
  std::string poly_file;
  std::string format = "graph6";
  int vertices = 0;
  int nvars = -1;

  void attach(CLI::App* cmd, bool allow_poly = true) {
    auto* fx = cmd->add_option("--fixture", fixture,
                               "built-in object: m13, p17, s11" +
                                   std::string(allow_poly ? ", q54" : ""));
    auto* gf = cmd->add_option("--graph", graph_file, "graph file, one record per line");
    cmd->add_option("--format", format, "graph record format: graph6 or edge-bits")
        ->check(CLI::IsMember({"graph6", "edge-bits"}));
    cmd->add_option("--vertices", vertices, "vertex count for edge-bits records");
    if (allow_poly) {
      auto* pf = cmd->add_option("--poly", poly_file, "polynomial file (canonical text form)");
      cmd->add_option("--nvars", nvars, "variable count for --poly (default: inferred)");
      fx->excludes(gf);
      fx->excludes(pf);
      gf->excludes(pf);
    } else {
      fx->excludes(gf);
    }
  }

  bool has_input() const { return !fixture.empty() || !graph_file.empty() || !poly_file.empty(); }

  bool is_poly() const { return !poly_file.empty() || fixture == "q54"; }

  std::string id() const {
    if (!fixture.empty()) return fixture;
    if (!graph_file.empty()) return graph_file;
    return poly_file;
  }

  Graph load_graph() const {
    if (!fixture.empty()) return fixture_graph(fixture);
    auto graphs = parse_graph_file(read_input(graph_file),
                                   format == "edge-bits" ? vertices : 0);
    if (graphs.empty()) throw Error("no graph records in " + graph_file);
    return graphs.front();
  }

  SparsePoly load_poly() const {
    if (!fixture.empty()) return fixture_poly(fixture);
    if (!poly_file.empty()) {
      std::istringstream in(read_input(poly_file));
      std::string line, body;
      while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!body.empty()) body += " ";
        body += line;
      }
      return parse_poly(body, nvars);
    }
    return basis_generating_poly(load_graph());
  }
};

std::vector<mpz_class> parse_point(const std::string& text, int n) {
  if (text == "ones") return std::vector<mpz_class>(n, 1);
  std::vector<mpz_class> pt;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) pt.emplace_back(tok);
  if (static_cast<int>(pt.size()) != n)
    throw Error("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                std::to_string(n));
  return pt;
}

json screen_report_json(const ScreenReport& r) {
  json j;
  j["graph_id"] = r.graph_id;
  j["edge_bits"] = r.edge_bits;
  j["n_edges"] = r.n_edges;
  j["hilbert"] = r.hilbert;
  j["k"] = r.k;
  j["reps"] = r.reps;
  j["s_max"] = r.s_max;
  j["seed"] = r.seed;
  j["nullity_min"] = r.nullity_min;
  j["candidate"] = r.candidate;
  j["prob_bound_exp10"] = r.prob_bound_exp10;
  j["nullities"] = r.nullities;
  j["confirmed"] = r.confirmed;
  return j;
}

json point_to_json(const std::vector<mpz_class>& pt) {
  json arr = json::array();
  for (const auto& x : pt) arr.push_back(x.get_str());
  return arr;
}

// ---- check ----

int cmd_check(const InputOptions& in, int k, const std::string& point_text, std::uint64_t seed,
              int reps, std::uint64_t s_max) {
  json out;
  out["command"] = "check";
  out["input"] = in.id();
  ScreenOptions esc;
  esc.reps = reps;
  esc.s_max = s_max;
  esc.seed = seed;
  bool holds;
  if (!point_text.empty() || k >= 0) {
    if (k < 0) throw Error("--point requires --k");
    SlpPointCheck chk;
    if (in.is_poly()) {
      SparsePoly f = in.load_poly();
      std::vector<mpz_class> pt =
          parse_point(point_text.empty() ? "ones" : point_text, f.variable_count());
      chk = slp_check_at_point(f, k, pt);
      out["point"] = point_to_json(pt);
    } else {
      Graph g = in.load_graph();
      std::vector<mpz_class> pt =
          parse_point(point_text.empty() ? "ones" : point_text, g.edge_count());
      chk = slp_check_at_point(g, k, pt);
      out["point"] = point_to_json(pt);
    }
    out["mode"] = "at_point";
    out["k"] = k;
    out["holds"] = chk.holds;
    out["nullity"] = chk.nullity;
    holds = chk.holds;
  } else {
    out["mode"] = "full";
    out["seed"] = seed;
    FullCheckResult res = in.is_poly() ? slp_full_check(in.load_poly(), seed, esc)
                                       : slp_full_check(in.load_graph(), seed, esc);
    out["has_slp"] = res.has_slp;
    if (res.has_slp) {
      out["witness"] = point_to_json(res.witness);
    } else {
      out["failing_k"] = res.failing_k;
      out["screen"] = screen_report_json(*res.screen);
    }
    holds = res.has_slp;
  }
  std::cout << out.dump() << "\n";
  return holds ? kExitHolds : kExitFails;
}

// ---- screen ----

int cmd_screen(const InputOptions& in, int enumerate_n, int k, int reps, std::uint64_t s_max,
               std::uint64_t seed, bool biconnected_only, int jobs, bool full_reps) {
  std::vector<Graph> graphs;
  if (enumerate_n > 0) {
    graphs = enumerate_nonisomorphic(
        enumerate_n, biconnected_only ? GraphFilter::kBiconnected : GraphFilter::kConnected);
  } else {
    graphs =
        parse_graph_file(read_input(in.graph_file), in.format == "edge-bits" ? in.vertices : 0);
    if (biconnected_only) {
      std::vector<Graph> keep;
      for (auto& g : graphs)
        if (is_biconnected(g)) keep.push_back(std::move(g));
      graphs = std::move(keep);
    }
  }
  ScreenOptions opt;
  opt.reps = reps;
  opt.s_max = s_max;
  opt.seed = seed;
  opt.early_exit = !full_reps;

  struct Task {
    int graph_idx;
    int k;
  };
  std::vector<Task> tasks;
  for (int gi = 0; gi < static_cast<int>(graphs.size()); ++gi) {
    int d = graphs[gi].vertex_count - 1;
    if (k >= 0) {
      if (2 * k <= d) tasks.push_back({gi, k});
    } else {
      for (int kk = 0; 2 * kk <= d; ++kk) tasks.push_back({gi, kk});
    }
  }

  // parallel map over tasks; the output is emitted in input order
  std::vector<std::string> lines(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<int> candidates{0};
  auto worker = [&]() {
    while (true) {
      std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      const Task& task = tasks[t];
      ScreenReport rep =
          sz_screen(graphs[task.graph_idx], task.k, opt, std::to_string(task.graph_idx + 1));
      if (rep.candidate) candidates.fetch_add(1);
      lines[t] = screen_report_json(rep).dump();
    }
  };
  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& line : lines) std::cout << line << "\n";
  json summary;
  summary["summary"] = true;
  summary["graphs"] = graphs.size();
  summary["tasks"] = tasks.size();
  summary["candidates"] = candidates.load();
  summary["seed"] = seed;
  std::cout << summary.dump() << "\n";
  return candidates.load() > 0 ? kExitFails : kExitHolds;
}

// ---- verify ----

int cmd_verify(const InputOptions& in, const std::string& cert_spec, std::uint64_t seed) {
  KernelCertificate cert;
  if (cert_spec == "m13-k3" || cert_spec == "s11-k2-ones")
    cert = fixture_certificate(cert_spec);
  else
    cert = parse_certificate(read_input(cert_spec));
  SparsePoly f = in.load_poly();
  VerifyReport rep = verify_certificate(f, cert, seed);
  json out;
  out["command"] = "verify";
  out["input"] = in.id();
  out["certificate"] = cert_spec;
  out["k"] = cert.k;
  out["pass"] = rep.pass;
  out["basis_matches"] = rep.basis_matches;
  if (cert.is_point_certificate()) {
    out["point_product_zero"] = rep.point_product_zero;
  } else {
    out["symbolic_product_zero"] = rep.symbolic_product_zero;
    out["pairing_sum_zero"] = rep.pairing_sum_zero;
    out["random_points_in_kernel"] = rep.random_points_in_kernel;
  }
  out["nonzero_components"] = cert.nonzero_components();
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  if (rep.pass) out["conclusion"] = rep.conclusion;
  std::cout << out.dump() << "\n";
  return rep.pass ? kExitHolds : kExitFails;
}

// ---- reconstruct ----

int cmd_reconstruct(const InputOptions& in, int k, int i0, std::uint64_t seed,
                    const std::string& out_file, const std::string& offsets_text) {
  HessianInstance inst = in.is_poly() ? HessianInstance::for_poly(in.load_poly(), k)
                                      : HessianInstance::for_graph(in.load_graph(), k);
  std::vector<int> offsets;
  if (!offsets_text.empty()) {
    std::stringstream ss(offsets_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) offsets.push_back(std::stoi(tok));
  }
  KernelCertificate cert = reconstruct_certificate(inst, i0, seed, offsets);
  cert.graph_id = in.id();
  std::string text = write_certificate(cert);
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw Error("cannot write " + out_file);
    out << text;
  } else {
    std::cout << text;
  }
  json summary;
  summary["command"] = "reconstruct";
  summary["input"] = in.id();
  summary["k"] = cert.k;
  summary["i0"] = cert.i0;
  summary["D"] = cert.degree_vector;
  summary["nonzero_components"] = cert.nonzero_components();
  summary["components"] = cert.components.size();
  summary["verified"] = true;
  if (!out_file.empty()) summary["certificate"] = out_file;
  std::cerr << summary.dump() << "\n";
  return kExitHolds;
}

// ---- hilbert ----

int cmd_hilbert(const InputOptions& in) {
  SparsePoly f = in.load_poly();
  HilbertFunction h = hilbert_function(f);
  json out;
  out["command"] = "hilbert";
  out["input"] = in.id();
  out["n"] = f.variable_count();
  out["socle_degree"] = static_cast<int>(h.size()) - 1;
  out["hilbert"] = h;
  json sizes = json::array();
  for (int k = 0; 2 * k <= static_cast<int>(h.size()) - 1; ++k)
    sizes.push_back(json{{"k", k}, {"dim", h[k]}});
  out["basis_sizes"] = sizes;
  std::cout << out.dump() << "\n";
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact strong-Lefschetz toolkit for spanning-tree polynomials of graphs"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "global seed; all randomness derives from it");

  auto* check = app.add_subcommand("check", "test the strong Lefschetz property");
  InputOptions check_in;
  check_in.attach(check);
  int check_k = -1;
  std::string check_point;
  int check_reps = 100;
  std::uint64_t check_smax = 1000000000ULL;
  check->add_option("--k", check_k, "restrict to one degree (used with --point)");
  check->add_option("--point", check_point, "comma-separated element coefficients, or 'ones'");
  check->add_option("--reps", check_reps, "escalation screen repetitions");
  check->add_option("--s-max", check_smax, "escalation sample range {1..s_max}");

  auto* screen = app.add_subcommand("screen", "randomized corpus screening, JSON lines");
  InputOptions screen_in;
  screen_in.attach(screen, false);
  int screen_enum = 0, screen_k = -1, screen_reps = 100, screen_jobs = 1;
  std::uint64_t screen_smax = 1000000000ULL;
  bool screen_bic = false, screen_full = false;
  screen->add_option("--enumerate", screen_enum, "screen all graphs on N vertices (N <= 8)");
  screen->add_option("--k", screen_k, "degree to screen (default: every admissible degree)");
  screen->add_option("--reps", screen_reps, "repetitions per graph");
  screen->add_option("--s-max", screen_smax, "sample range {1..s_max}");
  screen->add_flag("--biconnected-only", screen_bic, "keep biconnected graphs only");
  screen->add_option("--jobs", screen_jobs, "parallel graph pipelines");
  screen->add_flag("--full-reps", screen_full,
                   "run every repetition even after a nonsingular one");

  auto* verify = app.add_subcommand("verify", "verify a kernel certificate");
  InputOptions verify_in;
  verify_in.attach(verify);
  std::string cert_spec;
  verify->add_option("--cert", cert_spec, "certificate file, or m13-k3 / s11-k2-ones")
      ->required();

  auto* rec = app.add_subcommand("reconstruct", "reconstruct and verify a kernel certificate");
  InputOptions rec_in;
  rec_in.attach(rec);
  int rec_k = -1, rec_i0 = 0;
  std::string rec_out, rec_offsets;
  rec->add_option("--k", rec_k, "degree of the singular Lefschetz map")->required();
  rec->add_option("--i0", rec_i0, "pinned component index (default: auto)");
  rec->add_option("--out", rec_out, "write the certificate to this file");
  rec->add_option("--offsets", rec_offsets, "comma-separated grid offsets");

  auto* hil = app.add_subcommand("hilbert", "exact Hilbert function");
  InputOptions hil_in;
  hil_in.attach(hil);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) {
      if (!check_in.has_input()) throw Error("check needs --fixture, --graph or --poly");
      return cmd_check(check_in, check_k, check_point, seed, check_reps, check_smax);
    }
    if (screen->parsed()) {
      if (screen_enum == 0 && screen_in.graph_file.empty())
        throw Error("screen needs --graph or --enumerate");
      return cmd_screen(screen_in, screen_enum, screen_k, screen_reps, screen_smax, seed,
                        screen_bic, screen_jobs, screen_full);
    }
    if (verify->parsed()) {
      if (!verify_in.has_input()) throw Error("verify needs --fixture, --graph or --poly");
      return cmd_verify(verify_in, cert_spec, seed);
    }
    if (rec->parsed()) {
      if (!rec_in.has_input()) throw Error("reconstruct needs --fixture, --graph or --poly");
      return cmd_reconstruct(rec_in, rec_k, rec_i0, seed, rec_out, rec_offsets);
    }
    if (hil->parsed()) {
      if (!hil_in.has_input()) throw Error("hilbert needs --fixture, --graph or --poly");
      return cmd_hilbert(hil_in);
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const NullityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  }
  return kExitUsage;
}
