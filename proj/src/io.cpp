#include "colorsim/io.hpp"

#include <fstream>
#include <sstream>

namespace colorsim {

namespace {

std::string bits_to_hex(const BitVec& v) {
  static const char* kDigits = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < v.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4 && i + b < v.size(); ++b)
      nibble |= static_cast<unsigned>(v.get(i + b)) << b;
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BitVec hex_to_bits(const std::string& hex, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    char c = hex.at(i / 4);
    unsigned nibble = c <= '9' ? c - '0' : 10 + (c - 'a');
    v.set(i, (nibble >> (i % 4)) & 1);
  }
  return v;
}

const char* kind_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::kHex666: return "hex-666";
    case LatticeKind::kSquareSurface: return "square-surface";
    default: return "lattice-488";
  }
}

const char* boundary_name(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::kOpenTriangular: return "open-triangular";
    case BoundaryKind::kPeriodic: return "periodic";
    default: return "coprime-twisted";
  }
}

std::string phi_token(const Rational& phi) {
  // Multiples of pi, written as "k*pi/d".
  if (phi.num == 0) return "0";
  std::ostringstream os;
  os << phi.num << "*pi/" << phi.den;
  return os.str();
}

Rational parse_phi(const std::string& tok) {
  if (tok == "0") return Rational(0, 1);
  auto star = tok.find("*pi/");
  if (star == std::string::npos) throw std::invalid_argument("bad phi token: " + tok);
  return Rational(std::stoll(tok.substr(0, star)), std::stoll(tok.substr(star + 4)));
}

}  // namespace

nlohmann::json lattice_to_json(const Lattice& lat) {
  nlohmann::json j;
  j["kind"] = kind_name(lat.kind);
  j["boundary"] = boundary_name(lat.boundary.kind);
  j["distance"] = lat.distance;
  j["dims"] = {lat.dims[0], lat.dims[1]};
  if (lat.boundary.kind != BoundaryKind::kOpenTriangular) {
    j["identification"] = {{lat.boundary.identification[0][0], lat.boundary.identification[0][1]},
                           {lat.boundary.identification[1][0], lat.boundary.identification[1][1]}};
    j["twist"] = lat.boundary.twist;
  }
  auto& qubits = j["qubits"] = nlohmann::json::array();
  for (const Site& s : lat.qubits) qubits.push_back({s.a, s.b});
  auto& faces = j["faces"] = nlohmann::json::array();
  for (const Face& f : lat.faces) {
    nlohmann::json jf;
    jf["color"] = to_string(f.color);
    jf["center"] = {f.center.a, f.center.b};
    jf["qubits"] = f.qubits;
    if (f.role != FaceRole::kBothTypes) jf["role"] = f.role == FaceRole::kXType ? "x" : "z";
    faces.push_back(std::move(jf));
  }
  return j;
}

nlohmann::json code_to_json(const StabilizerCode& code) {
  nlohmann::json j;
  j["n"] = code.n;
  j["k"] = code.k;
  j["d_target"] = code.d_target;
  j["lattice"] = lattice_to_json(code.lattice);
  j["kappa"] = code.deformation.kappa.to_string();
  j["phi"] = phi_token(code.deformation.phi_pi);
  j["mask"] = bits_to_hex(code.deformation.pattern);
  auto& gens = j["generators"] = nlohmann::json::array();
  for (const auto& g : code.generators) {
    nlohmann::json pair = nlohmann::json::array({bits_to_hex(g.x), bits_to_hex(g.z)});
    gens.push_back(std::move(pair));
  }
  auto& logicals = j["logicals"] = nlohmann::json::array();
  for (const auto& lp : code.logicals) {
    nlohmann::json xb = nlohmann::json::array({bits_to_hex(lp.x_bar.x), bits_to_hex(lp.x_bar.z)});
    nlohmann::json zb = nlohmann::json::array({bits_to_hex(lp.z_bar.x), bits_to_hex(lp.z_bar.z)});
    logicals.push_back(nlohmann::json::array({std::move(xb), std::move(zb)}));
  }
  return j;
}

StabilizerCode code_from_json(const nlohmann::json& j) {
  StabilizerCode code;
  code.n = j.at("n").get<int>();
  code.k = j.at("k").get<int>();
  code.d_target = j.at("d_target").get<int>();
  code.deformation.kappa = Rational::parse(j.at("kappa").get<std::string>());
  code.deformation.phi_pi = parse_phi(j.at("phi").get<std::string>());
  code.deformation.pattern = hex_to_bits(j.at("mask").get<std::string>(), code.n);
  auto read_pauli = [&](const nlohmann::json& arr) {
    PauliOperator p(code.n);
    p.x = hex_to_bits(arr.at(0).get<std::string>(), code.n);
    p.z = hex_to_bits(arr.at(1).get<std::string>(), code.n);
    return p;
  };
  for (const auto& g : j.at("generators")) code.generators.push_back(read_pauli(g));
  for (const auto& lp : j.at("logicals"))
    code.logicals.push_back({read_pauli(lp.at(0)), read_pauli(lp.at(1))});
  // The lattice is reconstructed only as far as fixtures need it.
  const auto& jl = j.at("lattice");
  code.lattice.distance = jl.at("distance").get<int>();
  code.lattice.dims = {jl.at("dims").at(0).get<int>(), jl.at("dims").at(1).get<int>()};
  for (const auto& q : jl.at("qubits"))
    code.lattice.qubits.push_back({q.at(0).get<int>(), q.at(1).get<int>()});
  return code;
}

nlohmann::json syndrome_graph_to_json(const SyndromeGraph& graph) {
  nlohmann::json j;
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (const auto& n : graph.nodes)
    nodes.push_back({{"check", n.check}, {"boundary", n.is_boundary}});
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const auto& e : graph.edges)
    edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}, {"path", e.path_qubits}});
  return j;
}

nlohmann::json matching_to_json(const Matching& matching) {
  nlohmann::json j;
  j["total_weight"] = matching.total_weight;
  auto& pairs = j["pairs"] = nlohmann::json::array();
  for (auto [u, v] : matching.pairs) pairs.push_back(nlohmann::json::array({u, v}));
  return j;
}

namespace {

nlohmann::json point_to_json(const PointStats& ps) {
  nlohmann::json j;
  j["code"] = ps.code_label;
  j["family"] = ps.family;
  j["d"] = ps.size;
  j["L1"] = ps.dims[0];
  j["L2"] = ps.dims[1];
  j["kappa"] = ps.kappa.to_string();
  j["phi"] = phi_token(ps.phi);
  j["eta"] = ps.eta.to_string();
  j["p"] = ps.p;
  j["decoder"] = to_string(ps.decoder);
  j["trials"] = ps.trials;
  j["failures"] = ps.failures;
  j["p_L"] = ps.p_l;
  j["ci_lo"] = ps.ci_lo;
  j["ci_hi"] = ps.ci_hi;
  j["seed"] = ps.seed;
  j["seconds"] = ps.seconds;
  return j;
}

PointStats point_from_json(const nlohmann::json& j) {
  PointStats ps;
  ps.code_label = j.at("code").get<std::string>();
  ps.family = j.value("family", "");
  ps.size = j.at("d").get<int>();
  ps.dims[0] = j.value("L1", 0);
  ps.dims[1] = j.value("L2", 0);
  ps.kappa = Rational::parse(j.at("kappa").get<std::string>());
  ps.phi = parse_phi(j.at("phi").get<std::string>());
  ps.eta = Bias::parse(j.at("eta").get<std::string>());
  ps.p = j.at("p").get<double>();
  ps.decoder = decoder_kind_from_string(j.at("decoder").get<std::string>());
  ps.trials = j.at("trials").get<std::uint64_t>();
  ps.failures = j.at("failures").get<std::uint64_t>();
  ps.p_l = j.at("p_L").get<double>();
  ps.ci_lo = j.at("ci_lo").get<double>();
  ps.ci_hi = j.at("ci_hi").get<double>();
  ps.seed = j.at("seed").get<std::uint64_t>();
  ps.seconds = j.at("seconds").get<double>();
  return ps;
}

std::string csv_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void append_results_jsonl(const std::string& path, const TrialStatistics& stats) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const auto& ps : stats.points) out << point_to_json(ps).dump() << "\n";
}

std::string results_csv_string(const TrialStatistics& stats) {
  std::ostringstream out;
  out << "code,family,d,L1,L2,kappa,phi,eta,p,decoder,trials,failures,p_L,ci_lo,ci_hi,seed,"
         "seconds\n";
  for (const auto& ps : stats.points) {
    out << ps.code_label << ',' << ps.family << ',' << ps.size << ',' << ps.dims[0] << ','
        << ps.dims[1] << ',' << ps.kappa.to_string() << ',' << phi_token(ps.phi) << ','
        << ps.eta.to_string() << ',' << csv_double(ps.p) << ',' << to_string(ps.decoder) << ','
        << ps.trials << ',' << ps.failures << ',' << csv_double(ps.p_l) << ','
        << csv_double(ps.ci_lo) << ',' << csv_double(ps.ci_hi) << ',' << ps.seed << ','
        << csv_double(ps.seconds) << "\n";
  }
  return out.str();
}

void write_results_csv(const std::string& path, const TrialStatistics& stats) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << results_csv_string(stats);
}

TrialStatistics read_results_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
  TrialStatistics stats;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(cell);
    if (cols.size() != 17) throw std::runtime_error("bad csv row: " + line);
    PointStats ps;
    ps.code_label = cols[0];
    ps.family = cols[1];
    ps.size = std::stoi(cols[2]);
    ps.dims[0] = std::stoi(cols[3]);
    ps.dims[1] = std::stoi(cols[4]);
    ps.kappa = Rational::parse(cols[5]);
    ps.phi = parse_phi(cols[6]);
    ps.eta = Bias::parse(cols[7]);
    ps.p = std::stod(cols[8]);
    ps.decoder = decoder_kind_from_string(cols[9]);
    ps.trials = std::stoull(cols[10]);
    ps.failures = std::stoull(cols[11]);
    ps.p_l = std::stod(cols[12]);
    ps.ci_lo = std::stod(cols[13]);
    ps.ci_hi = std::stod(cols[14]);
    ps.seed = std::stoull(cols[15]);
    ps.seconds = std::stod(cols[16]);
    stats.points.push_back(std::move(ps));
  }
  return stats;
}

TrialStatistics read_results_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  TrialStatistics stats;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    stats.points.push_back(point_from_json(nlohmann::json::parse(line)));
  }
  return stats;
}

nlohmann::json threshold_report_json(const ThresholdEstimate& est,
                                     const std::vector<FitPoint>& points) {
  nlohmann::json j;
  j["p_th"] = est.p_th;
  j["p_th_err"] = est.p_th_err;
  j["beta"] = est.beta;
  j["beta_err"] = est.beta_err;
  j["B0"] = est.b0;
  j["B1"] = est.b1;
  j["B2"] = est.b2;
  j["chi2_per_dof"] = est.residual;
  j["extrapolated"] = est.extrapolated;
  auto& pts = j["points"] = nlohmann::json::array();
  for (const auto& p : points)
    pts.push_back({{"d", p.size},
                   {"p", p.p},
                   {"p_L", p.p_l},
                   {"trials", p.trials},
                   {"failures", p.failures}});
  return j;
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line, section;
  auto trim = [](std::string s) {
    auto a = s.find_first_not_of(" \t\r");
    auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    out[section.empty() ? key : section + "." + key] = value;
  }
  return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace colorsim
