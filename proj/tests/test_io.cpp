#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "colorsim/exact_decoder.hpp"
#include "colorsim/io.hpp"
#include "colorsim/matching.hpp"
#include "colorsim/restriction_decoder.hpp"

using namespace colorsim;

namespace {

std::string temp_path(const char* name) { return std::string("/tmp/colorsim_test_") + name; }

StabilizerCode x3z3(int d) {
  Lattice lat = build_hex_triangular(d);
  return apply_deformation(build_css_color_code(lat), make_deformation(lat, {1, 1}, {1, 6}));
}

TrialStatistics sample_stats() {
  TrialStatistics stats;
  PointStats ps;
  ps.code_label = "x3z3-d5";
  ps.family = "x3z3";
  ps.size = 5;
  ps.p = 0.126;
  ps.eta = Bias::finite(30000);
  ps.decoder = DecoderKind::kRestriction;
  ps.trials = 200000;
  ps.failures = 12345;
  ps.p_l = 12345.0 / 200000.0;
  wilson_interval(ps.failures, ps.trials, ps.ci_lo, ps.ci_hi);
  ps.seed = 42;
  ps.seconds = 1.5;
  ps.kappa = Rational(1, 1);
  ps.phi = Rational(1, 6);
  stats.points.push_back(ps);
  PointStats deph = ps;
  deph.eta = Bias::inf();
  deph.p = 0.5;
  stats.points.push_back(deph);
  return stats;
}

}  // namespace

TEST_CASE("config parser handles sections, comments and whitespace") {
  auto cfg = parse_config_text(
      "# run description\n"
      "seed = 7\n"
      "[sweep]\n"
      "eta = inf   # pure dephasing\n"
      "p = 0.40:0.56:0.02\n"
      "\n"
      "[output]\n"
      "dir = results\n");
  CHECK(cfg.at("seed") == "7");
  CHECK(cfg.at("sweep.eta") == "inf");
  CHECK(cfg.at("sweep.p") == "0.40:0.56:0.02");
  CHECK(cfg.at("output.dir") == "results");
  CHECK_THROWS(parse_config_text("not a key value line\n"));
}

TEST_CASE("csv round trip is byte identical") {
  TrialStatistics stats = sample_stats();
  std::string path = temp_path("round.csv");
  write_results_csv(path, stats);
  TrialStatistics back = read_results_csv(path);
  std::string again = results_csv_string(back);
  std::ifstream in(path);
  std::string original((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(again == original);
  std::remove(path.c_str());
}

TEST_CASE("jsonl round trip preserves every field") {
  TrialStatistics stats = sample_stats();
  std::string path = temp_path("round.jsonl");
  std::remove(path.c_str());
  append_results_jsonl(path, stats);
  append_results_jsonl(path, stats);  // append-only semantics
  TrialStatistics back = read_results_jsonl(path);
  REQUIRE(back.points.size() == 4);
  CHECK(back.points[0].code_label == stats.points[0].code_label);
  CHECK(back.points[0].trials == stats.points[0].trials);
  CHECK(back.points[0].failures == stats.points[0].failures);
  CHECK(back.points[1].eta.infinite);
  CHECK(back.points[0].eta == Bias::finite(30000));
  CHECK(back.points[0].kappa == Rational(1, 1));
  CHECK(back.points[0].phi == Rational(1, 6));
  std::remove(path.c_str());
}

TEST_CASE("code fixtures round trip and stay decodable") {
  StabilizerCode code = x3z3(3);
  nlohmann::json j = code_to_json(code);
  StabilizerCode back = code_from_json(j);
  CHECK(back.n == code.n);
  CHECK(back.k == code.k);
  REQUIRE(back.generators.size() == code.generators.size());
  for (std::size_t g = 0; g < code.generators.size(); ++g)
    CHECK(back.generators[g] == code.generators[g]);
  REQUIRE(back.logicals.size() == code.logicals.size());
  CHECK(back.logicals[0].x_bar == code.logicals[0].x_bar);
  CHECK(back.deformation.pattern == code.deformation.pattern);

  // The fixture is complete enough to decode against.
  ExactMLDecoder dec(back, NoiseChannel::uniform(0.1, Bias::finite(0.5)));
  PauliOperator err(back.n);
  err.z.set(2, true);
  DecodeResult res = dec.decode(syndrome_of(back, err));
  CHECK(syndrome_of(back, res.correction).bits == syndrome_of(back, err).bits);
}

TEST_CASE("syndrome graphs and matchings export as JSON") {
  StabilizerCode code = x3z3(5);
  NoiseChannel ch = NoiseChannel::uniform(0.1, Bias::finite(2));
  RestrictionDecoder dec(code, ch);
  PauliOperator err(code.n);
  err.z.set(3, true);
  err.x.set(11, true);
  auto graphs = dec.build_graphs(syndrome_of(code, err));
  REQUIRE(graphs.size() == 4);
  nlohmann::json jg = syndrome_graph_to_json(graphs[0]);
  CHECK(jg["nodes"].size() == graphs[0].nodes.size());
  CHECK(jg["edges"].size() == graphs[0].edges.size());

  Matching m = mwpm(4, {{0, 1, 1.0}, {2, 3, 2.0}, {0, 2, 9.0}, {1, 3, 9.0}});
  nlohmann::json jm = matching_to_json(m);
  CHECK(jm["total_weight"] == doctest::Approx(3.0));
  CHECK(jm["pairs"].size() == 2);
}

TEST_CASE("lattice export carries geometry and identifications") {
  nlohmann::json j = lattice_to_json(build_hex_periodic(6));
  CHECK(j["kind"] == "hex-666");
  CHECK(j["boundary"] == "periodic");
  CHECK(j["qubits"].size() == 72);
  CHECK(j["faces"].size() == 36);
  CHECK(j["identification"][0][1] == 18);

  nlohmann::json jc = lattice_to_json(build_hex_coprime(1));
  CHECK(jc["boundary"] == "coprime-twisted");
  CHECK(jc["twist"] == 1);
}
