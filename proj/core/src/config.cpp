#include "dikin/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dikin {

namespace {

using nlohmann::json;

json require(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ConfigParseError(path, "missing required key");
  return j.at(key);
}

Eigen::VectorXd read_vector(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigParseError(path, "expected an array of numbers");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ConfigParseError(path, "expected numbers");
    v[static_cast<int>(i)] = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd read_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ConfigParseError(path, "expected a non-empty array of rows");
  }
  Eigen::VectorXd first = read_vector(j[0], path + "[0]");
  Eigen::MatrixXd m(j.size(), first.size());
  m.row(0) = first;
  for (std::size_t i = 1; i < j.size(); ++i) {
    Eigen::VectorXd row = read_vector(j[i], path + "[" + std::to_string(i) + "]");
    if (row.size() != first.size()) {
      throw ConfigParseError(path, "ragged matrix rows");
    }
    m.row(static_cast<int>(i)) = row;
  }
  return m;
}

Domain read_domain(const json& j) {
  std::string kind = require(j, "kind", "domain.kind").get<std::string>();
  try {
    if (kind == "box") {
      json bounds = require(j, "bounds", "domain.bounds");
      return Domain::box(
          read_vector(require(bounds, "lower", "domain.bounds.lower"),
                      "domain.bounds.lower"),
          read_vector(require(bounds, "upper", "domain.bounds.upper"),
                      "domain.bounds.upper"));
    }
    if (kind == "ball") {
      return Domain::ball(
          read_vector(require(j, "center", "domain.center"), "domain.center"),
          require(j, "radius", "domain.radius").get<double>());
    }
    if (kind == "polytope") {
      std::optional<Eigen::VectorXd> hint;
      if (j.contains("interior_point")) {
        hint = read_vector(j.at("interior_point"), "domain.interior_point");
      }
      std::optional<double> diam;
      if (j.contains("diameter")) diam = j.at("diameter").get<double>();
      return Domain::polytope(read_matrix(require(j, "A", "domain.A"), "domain.A"),
                              read_vector(require(j, "b", "domain.b"), "domain.b"),
                              hint, diam);
    }
  } catch (const ConfigParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigParseError("domain", e.what());
  } catch (const Error& e) {
    throw ConfigParseError("domain", e.what());
  }
  throw ConfigParseError("domain.kind", "unknown kind '" + kind + "'");
}

AdversaryScript read_adversary(const json& j, int horizon, std::uint64_t seed) {
  std::string kind = require(j, "kind", "adversary.kind").get<std::string>();
  json params = j.value("params", json::object());
  try {
    if (kind == "iid_linear") {
      return AdversaryScript::iid_linear(horizon, seed,
                                         params.value("scale", 1.0));
    }
    if (kind == "alternating") {
      return AdversaryScript::alternating(horizon);
    }
    if (kind == "piecewise_linear") {
      json segs = require(params, "segments", "adversary.params.segments");
      std::vector<Segment> segments;
      for (std::size_t i = 0; i < segs.size(); ++i) {
        std::string path = "adversary.params.segments[" + std::to_string(i) + "]";
        Segment s;
        s.length = require(segs[i], "length", path + ".length").get<int>();
        s.c = read_vector(require(segs[i], "c", path + ".c"), path + ".c");
        segments.push_back(std::move(s));
      }
      return AdversaryScript::piecewise_linear(horizon, std::move(segments));
    }
    if (kind == "fixed_quadratic") {
      Eigen::VectorXd opt = read_vector(
          require(params, "optimum", "adversary.params.optimum"),
          "adversary.params.optimum");
      Eigen::MatrixXd Q =
          params.contains("Q")
              ? read_matrix(params.at("Q"), "adversary.params.Q")
              : Eigen::MatrixXd(Eigen::MatrixXd::Identity(opt.size(), opt.size()));
      return AdversaryScript::fixed_quadratic(horizon, std::move(Q),
                                              std::move(opt));
    }
  } catch (const ConfigParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigParseError("adversary", e.what());
  } catch (const Error& e) {
    throw ConfigParseError("adversary", e.what());
  }
  throw ConfigParseError("adversary.kind", "unknown kind '" + kind + "'");
}

std::vector<LearnerSpec> read_learners(const json& j) {
  std::vector<LearnerSpec> specs;
  if (!j.is_array()) throw ConfigParseError("learner", "expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string path = "learner[" + std::to_string(i) + "]";
    const json& lj = j[i];
    LearnerSpec spec;
    try {
      spec.kind = require(lj, "kind", path + ".kind").get<std::string>();
      if (spec.kind != "ip" && spec.kind != "ip_doubling" &&
          spec.kind != "ogd" && spec.kind != "ftl") {
        throw ConfigParseError(path + ".kind",
                               "unknown learner '" + spec.kind + "'");
      }
      spec.label = lj.value("label", std::string());
      if (lj.contains("eta")) spec.eta = lj.at("eta").get<double>();
      if (lj.contains("grad_bound")) {
        spec.grad_bound = lj.at("grad_bound").get<double>();
      }
      if (lj.contains("divergence_bound")) {
        spec.divergence_bound = lj.at("divergence_bound").get<double>();
      }
      if (lj.contains("g0")) spec.g0 = lj.at("g0").get<double>();
    } catch (const json::exception& e) {
      throw ConfigParseError(path, e.what());
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

ExperimentConfig from_json(const json& j) {
  ExperimentConfig config;

  if (!j.contains("horizon") || !j.at("horizon").is_number_integer()) {
    throw ConfigParseError("horizon", "required integer");
  }
  config.horizon = j.at("horizon").get<int>();
  if (config.horizon < 2) {
    throw ConfigParseError("horizon", "must be at least 2, got " +
                                          std::to_string(config.horizon));
  }
  if (j.contains("seed") && !j.at("seed").is_number()) {
    throw ConfigParseError("seed", "expected a number");
  }
  config.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("out") && !j.at("out").is_string()) {
    throw ConfigParseError("out", "expected a string");
  }
  config.out_dir = j.value("out", std::string());
  if (j.contains("diameter")) {
    if (!j.at("diameter").is_number()) {
      throw ConfigParseError("diameter", "expected a number");
    }
    config.diameter_override = j.at("diameter").get<double>();
  }

  config.domain = read_domain(require(j, "domain", "domain"));
  config.adversary = read_adversary(require(j, "adversary", "adversary"),
                                    config.horizon, config.seed);
  if (j.contains("learner")) {
    config.learners = read_learners(j.at("learner"));
  }
  if (j.contains("x1")) {
    config.x1 = read_vector(j.at("x1"), "x1");
    if (config.x1->size() != config.domain.dimension()) {
      throw ConfigParseError("x1", "wrong dimension");
    }
    if (!config.domain.is_interior(*config.x1)) {
      throw ConfigParseError("x1", "must be strictly interior");
    }
  }
  return config;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigParseError("<document>", "invalid JSON");
  return j;
}

json domain_to_json(const Domain& d) {
  json j;
  switch (d.kind()) {
    case DomainKind::kBox: {
      j["kind"] = "box";
      j["bounds"]["lower"] = std::vector<double>(
          d.lower().data(), d.lower().data() + d.lower().size());
      j["bounds"]["upper"] = std::vector<double>(
          d.upper().data(), d.upper().data() + d.upper().size());
      break;
    }
    case DomainKind::kBall: {
      j["kind"] = "ball";
      j["center"] = std::vector<double>(d.center().data(),
                                        d.center().data() + d.center().size());
      j["radius"] = d.radius();
      break;
    }
    case DomainKind::kPolytope: {
      j["kind"] = "polytope";
      json rows = json::array();
      for (int i = 0; i < d.constraint_matrix().rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < d.constraint_matrix().cols(); ++k) {
          row.push_back(d.constraint_matrix()(i, k));
        }
        rows.push_back(std::move(row));
      }
      j["A"] = std::move(rows);
      j["b"] = std::vector<double>(
          d.constraint_rhs().data(),
          d.constraint_rhs().data() + d.constraint_rhs().size());
      if (d.has_interior_hint()) {
        Eigen::VectorXd hint = d.interior_point();
        j["interior_point"] =
            std::vector<double>(hint.data(), hint.data() + hint.size());
      }
      if (d.diameter_override()) j["diameter"] = *d.diameter_override();
      break;
    }
  }
  return j;
}

json adversary_to_json(const AdversaryScript& a) {
  json j;
  switch (a.kind()) {
    case AdversaryKind::kIidLinear:
      j["kind"] = "iid_linear";
      j["params"]["scale"] = a.scale();
      break;
    case AdversaryKind::kAlternating:
      j["kind"] = "alternating";
      break;
    case AdversaryKind::kPiecewiseLinear: {
      j["kind"] = "piecewise_linear";
      json segs = json::array();
      for (const auto& s : a.segments()) {
        json sj;
        sj["length"] = s.length;
        sj["c"] = std::vector<double>(s.c.data(), s.c.data() + s.c.size());
        segs.push_back(std::move(sj));
      }
      j["params"]["segments"] = std::move(segs);
      break;
    }
    case AdversaryKind::kFixedQuadratic: {
      j["kind"] = "fixed_quadratic";
      json rows = json::array();
      const Eigen::MatrixXd& Q = a.quadratic_matrix();
      for (int i = 0; i < Q.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < Q.cols(); ++k) row.push_back(Q(i, k));
        rows.push_back(std::move(row));
      }
      j["params"]["Q"] = std::move(rows);
      j["params"]["optimum"] = std::vector<double>(
          a.quadratic_optimum().data(),
          a.quadratic_optimum().data() + a.quadratic_optimum().size());
      break;
    }
  }
  return j;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  return from_json(parse_text(json_text));
}

ExperimentConfig load_experiment_config(const std::string& path,
                                        std::optional<std::uint64_t> seed_override,
                                        std::optional<int> horizon_override) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j = parse_text(buffer.str());
  if (seed_override) j["seed"] = *seed_override;
  if (horizon_override) j["horizon"] = *horizon_override;
  return from_json(j);
}

std::string serialize_experiment_config(const ExperimentConfig& config) {
  json j;
  j["horizon"] = config.horizon;
  j["seed"] = config.seed;
  j["domain"] = domain_to_json(config.domain);
  j["adversary"] = adversary_to_json(config.adversary);
  json learners = json::array();
  for (const auto& spec : config.learners) {
    json lj;
    lj["kind"] = spec.kind;
    if (!spec.label.empty()) lj["label"] = spec.label;
    if (spec.eta) lj["eta"] = *spec.eta;
    if (spec.grad_bound) lj["grad_bound"] = *spec.grad_bound;
    if (spec.divergence_bound) lj["divergence_bound"] = *spec.divergence_bound;
    if (spec.g0) lj["g0"] = *spec.g0;
    learners.push_back(std::move(lj));
  }
  j["learner"] = std::move(learners);
  if (config.x1) {
    j["x1"] = std::vector<double>(config.x1->data(),
                                  config.x1->data() + config.x1->size());
  }
  if (config.diameter_override) j["diameter"] = *config.diameter_override;
  if (!config.out_dir.empty()) j["out"] = config.out_dir;
  return j.dump(2);
}

SweepConfig parse_sweep_config(const std::string& json_text) {
  json j = parse_text(json_text);
  SweepConfig sweep;
  json horizons = require(j, "horizons", "horizons");
  for (const auto& h : horizons) sweep.horizons.push_back(h.get<int>());
  json seeds = require(j, "seeds", "seeds");
  for (const auto& s : seeds) sweep.seeds.push_back(s.get<std::uint64_t>());
  if (sweep.horizons.empty()) throw ConfigParseError("horizons", "must be non-empty");
  if (sweep.seeds.empty()) throw ConfigParseError("seeds", "must be non-empty");
  sweep.base_json = require(j, "base", "base").dump();
  return sweep;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_config(buffer.str());
}

ExperimentConfig instantiate_sweep_point(const SweepConfig& sweep, int horizon,
                                         std::uint64_t seed) {
  json j = parse_text(sweep.base_json);
  j["horizon"] = horizon;
  j["seed"] = seed;
  return from_json(j);
}

}  // namespace dikin
