#include "isingecho/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace isingecho {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("config: " + msg); }

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) fail("unknown key '" + item.key() + "' in " + where);
    }
}

double number_at(const json& j, const std::string& key) {
    if (!j.at(key).is_number()) fail("'" + key + "' must be a number");
    return j.at(key).get<double>();
}

GridRange range_from(const json& j, const std::string& key) {
    const json& v = j.at(key);
    GridRange r;
    if (v.is_number()) {
        r.min = r.max = v.get<double>();
        r.step = 0.0;
        return r;
    }
    if (!v.is_object()) fail("'" + key + "' must be a number or {min,max,step}");
    check_keys(v, {"min", "max", "step"}, "'" + key + "'");
    r.min = number_at(v, "min");
    r.max = number_at(v, "max");
    r.step = number_at(v, "step");
    return r;
}

}  // namespace

GridConvention grid_convention_from_string(const std::string& name) {
    if (name == "paper") return GridConvention::PaperInteger;
    if (name == "antiperiodic") return GridConvention::AntiPeriodic;
    fail("grid must be \"paper\" or \"antiperiodic\", got \"" + name + "\"");
}

std::string to_string(GridConvention conv) {
    return conv == GridConvention::PaperInteger ? "paper" : "antiperiodic";
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail("top level must be an object");
    check_keys(j, {"N", "J", "a", "delta", "lambda", "time", "grid", "outputs"}, "config");
    for (const char* key : {"N", "delta", "lambda", "time"}) {
        if (!j.contains(key)) fail(std::string("missing required key '") + key + "'");
    }

    SweepConfig cfg;
    if (!j.at("N").is_number_integer()) fail("'N' must be an integer");
    cfg.base.N = j.at("N").get<int>();
    cfg.base.J = j.contains("J") ? number_at(j, "J") : 1.0;
    cfg.base.a = j.contains("a") ? number_at(j, "a") : 1.0;
    cfg.base.delta = number_at(j, "delta");
    cfg.lambda = range_from(j, "lambda");
    cfg.base.lambda = cfg.lambda.min;
    cfg.time = range_from(j, "time");
    if (cfg.time.scalar() && !j.at("time").is_object())
        fail("'time' must be {min,max,step}");
    if (j.contains("grid")) {
        if (!j.at("grid").is_string()) fail("'grid' must be a string");
        cfg.grid = grid_convention_from_string(j.at("grid").get<std::string>());
    }
    if (j.contains("outputs")) {
        if (!j.at("outputs").is_array()) fail("'outputs' must be an array");
        for (const auto& o : j.at("outputs")) {
            if (!o.is_object()) fail("each output must be an object");
            check_keys(o, {"format", "path"}, "output entry");
            for (const char* key : {"format", "path"}) {
                if (!o.contains(key) || !o.at(key).is_string())
                    fail(std::string("output entry needs string '") + key + "'");
            }
            cfg.outputs.push_back({o.at("format").get<std::string>(),
                                   o.at("path").get<std::string>()});
        }
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) fail("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(is);
    } catch (const json::parse_error& e) {
        fail("parse error in '" + path + "': " + e.what());
    }
    return sweep_config_from_json(j);
}

nlohmann::ordered_json sweep_config_to_json(const SweepConfig& cfg) {
    nlohmann::ordered_json j;
    j["N"] = cfg.base.N;
    j["J"] = cfg.base.J;
    j["a"] = cfg.base.a;
    j["delta"] = cfg.base.delta;
    if (cfg.lambda.scalar()) {
        j["lambda"] = cfg.lambda.min;
    } else {
        j["lambda"] = {{"min", cfg.lambda.min}, {"max", cfg.lambda.max}, {"step", cfg.lambda.step}};
    }
    j["time"] = {{"min", cfg.time.min}, {"max", cfg.time.max}, {"step", cfg.time.step}};
    j["grid"] = to_string(cfg.grid);
    auto outs = nlohmann::ordered_json::array();
    for (const auto& o : cfg.outputs) outs.push_back({{"format", o.format}, {"path", o.path}});
    j["outputs"] = std::move(outs);
    return j;
}

}  // namespace isingecho
