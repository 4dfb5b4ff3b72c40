#include "config.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace srbm {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_number(const std::string& v, int line) {
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        fail(ErrorCode::InvalidArgument,
             "line " + std::to_string(line) + ": not a decimal literal: '" + v + "'");
    return x;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    static const std::set<std::string> known = {
        "sigma11", "sigma12", "sigma22", "mu1", "mu2", "r12", "r21", "x1", "x2",
        "nodes", "tol", "dt", "tmax", "paths", "seed"};

    std::map<std::string, std::pair<std::string, int>> kv;
    std::string unknown;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::InvalidArgument,
                 "line " + std::to_string(lineNo) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!known.count(key)) {
            if (!unknown.empty()) unknown += ", ";
            unknown += key + " (line " + std::to_string(lineNo) + ")";
            continue;
        }
        if (kv.count(key))
            fail(ErrorCode::InvalidArgument,
                 "line " + std::to_string(lineNo) + ": duplicate key '" + key + "'");
        kv[key] = {val, lineNo};
    }
    if (!unknown.empty())
        fail(ErrorCode::InvalidArgument, "unknown keys: " + unknown);

    RunConfig cfg;
    auto num = [&](const char* key, double dflt) {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : parse_number(it->second.first, it->second.second);
    };
    cfg.model.sigma11 = num("sigma11", 1.0);
    cfg.model.sigma12 = num("sigma12", 0.0);
    cfg.model.sigma22 = num("sigma22", 1.0);
    cfg.model.mu1 = num("mu1", 1.0);
    cfg.model.mu2 = num("mu2", 1.0);
    cfg.model.r12 = num("r12", 0.0);
    cfg.model.r21 = num("r21", 0.0);
    cfg.model.x1 = num("x1", 1.0);
    cfg.model.x2 = num("x2", 1.0);
    cfg.quadratureNodes = static_cast<int>(num("nodes", 512));
    cfg.quadratureTol = num("tol", 1e-8);
    cfg.sim.dt = num("dt", 1e-3);
    cfg.sim.tMax = num("tmax", 30.0);
    cfg.sim.paths = static_cast<long long>(num("paths", 100000));
    cfg.sim.seed = static_cast<std::uint64_t>(num("seed", 42));
    cfg.model.validate();
    return cfg;
}

}  // namespace srbm
