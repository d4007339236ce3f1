#include "blotto/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace blotto {

using nlohmann::json;

namespace {

json require_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParameterError(std::string("missing field: ") + key);
    return doc.at(key);
}

double finite_number(const json& value, const char* what) {
    if (!value.is_number()) throw ParameterError(std::string(what) + " must be a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw ParameterError(std::string(what) + " must be finite");
    return x;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    out << text;
    if (!out) throw ParameterError("write failed: " + path);
}

}  // namespace

std::string write_game_spec(const GameSpec& spec, int indent) {
    json doc;
    doc["n"] = spec.players();
    doc["m"] = spec.fields();
    json adjacency = json::array();
    for (int i = 0; i < spec.players(); ++i) {
        json row = json::array();
        for (int j = 0; j < spec.fields(); ++j) {
            row.push_back(spec.network.accessible(i, j) ? 1 : 0);
        }
        adjacency.push_back(std::move(row));
    }
    doc["adjacency"] = std::move(adjacency);
    doc["weights"] = spec.weights;
    doc["r"] = spec.tie_factor;
    doc["v"] = spec.hunting_cost;
    return doc.dump(indent) + "\n";
}

GameSpec parse_game_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParameterError(std::string("invalid JSON: ") + e.what());
    }
    const json jn = require_field(doc, "n");
    const json jm = require_field(doc, "m");
    if (!jn.is_number_integer() || !jm.is_number_integer()) {
        throw ParameterError("n and m must be integers");
    }
    const int n = jn.get<int>();
    const int m = jm.get<int>();
    if (n < 1 || m < 1) throw ParameterError("n and m must be >= 1");

    const json adjacency = require_field(doc, "adjacency");
    if (!adjacency.is_array() || adjacency.size() != static_cast<std::size_t>(n)) {
        throw ParameterError("adjacency must be an array of n rows");
    }
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * m, 0);
    for (int i = 0; i < n; ++i) {
        const json& row = adjacency.at(i);
        if (!row.is_array() || row.size() != static_cast<std::size_t>(m)) {
            throw ParameterError("adjacency row " + std::to_string(i + 1) + " must have m entries");
        }
        for (int j = 0; j < m; ++j) {
            const json& cell = row.at(j);
            if (!cell.is_number_integer() || (cell.get<int>() != 0 && cell.get<int>() != 1)) {
                throw ParameterError("adjacency entries must be 0 or 1");
            }
            adj[static_cast<std::size_t>(i) * m + j] = static_cast<std::uint8_t>(cell.get<int>());
        }
    }

    const json jw = require_field(doc, "weights");
    if (!jw.is_array() || jw.size() != static_cast<std::size_t>(m)) {
        throw ParameterError("weights must be an array of m numbers");
    }
    std::vector<double> weights(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        weights[j] = finite_number(jw.at(j), "weight");
        if (!(weights[j] > 0.0)) throw ParameterError("weights must be positive");
    }

    const double r = finite_number(require_field(doc, "r"), "r");
    if (!(r >= 0.0 && r < 1.0)) throw ParameterError("r must lie in [0, 1)");
    const double v = finite_number(require_field(doc, "v"), "v");
    if (!(v >= 0.0)) throw ParameterError("v must be nonnegative");

    try {
        return GameSpec(AccessibilityNetwork(n, m, std::move(adj)), std::move(weights), r, v);
    } catch (const InvalidDimensions& e) {
        throw ParameterError(e.what());
    }
}

GameSpec load_game_spec(const std::string& path) { return parse_game_spec(slurp(path)); }

void save_game_spec(const GameSpec& spec, const std::string& path) {
    spill(path, write_game_spec(spec));
}

std::string write_profile(const StrategyProfile& profile, int indent) {
    json players = json::array();
    for (const PlayerStrategy& s : profile.players) {
        json hunt = json::object();
        for (const FieldProbability& fp : s.hunt) {
            hunt[std::to_string(fp.field + 1)] = fp.probability;
        }
        players.push_back(json{{"abstain", s.abstain}, {"hunt", std::move(hunt)}});
    }
    json doc;
    doc["players"] = std::move(players);
    return doc.dump(indent) + "\n";
}

StrategyProfile parse_profile(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidProfile(std::string("invalid JSON: ") + e.what());
    }
    const json players = require_field(doc, "players");
    if (!players.is_array() || players.empty()) {
        throw InvalidProfile("players must be a non-empty array");
    }
    StrategyProfile profile;
    for (const json& entry : players) {
        PlayerStrategy s;
        s.abstain = entry.contains("abstain") ? finite_number(entry.at("abstain"), "abstain") : 0.0;
        s.hunt.clear();
        if (entry.contains("hunt")) {
            const json& hunt = entry.at("hunt");
            if (!hunt.is_object()) throw InvalidProfile("hunt must map field labels to probabilities");
            for (auto it = hunt.begin(); it != hunt.end(); ++it) {
                int label = 0;
                try {
                    label = std::stoi(it.key());
                } catch (const std::exception&) {
                    throw InvalidProfile("field label '" + it.key() + "' is not an integer");
                }
                if (label < 1) throw InvalidProfile("field labels are 1-based");
                s.hunt.push_back({label - 1, finite_number(it.value(), "hunt probability")});
            }
            std::sort(s.hunt.begin(), s.hunt.end(),
                      [](const FieldProbability& a, const FieldProbability& b) {
                          return a.field < b.field;
                      });
        }
        profile.players.push_back(std::move(s));
    }
    return profile;
}

StrategyProfile load_profile(const std::string& path) { return parse_profile(slurp(path)); }

void save_profile(const StrategyProfile& profile, const std::string& path) {
    spill(path, write_profile(profile));
}

std::string write_sim_report(const sim::SimReport& report, int indent) {
    json doc;
    doc["replications"] = report.replications;
    doc["seed"] = report.seed;
    doc["mean_payoffs"] = report.mean_payoffs;
    doc["payoff_stderr"] = report.payoff_stderr;
    doc["survival_rate"] = report.survival_rate;
    doc["survival_stderr"] = report.survival_stderr;
    return doc.dump(indent) + "\n";
}

std::string write_certification(const sim::CertificationReport& report, int indent) {
    json players = json::array();
    for (std::size_t i = 0; i < report.players.size(); ++i) {
        const sim::PlayerGain& pg = report.players[i];
        json entry;
        entry["player"] = i + 1;
        entry["gain"] = pg.gain;
        if (pg.best_action.is_hunt()) {
            entry["best_action"] = json{{"hunt", pg.best_action.field() + 1}};
        } else {
            entry["best_action"] = "abstain";
        }
        players.push_back(std::move(entry));
    }
    json doc;
    doc["tolerance"] = report.tolerance;
    doc["max_gain"] = report.max_gain;
    doc["equilibrium"] = report.equilibrium;
    doc["players"] = std::move(players);
    return doc.dump(indent) + "\n";
}

}  // namespace blotto
