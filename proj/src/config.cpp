#include "kerrspin/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "kerrspin/errors.hpp"

namespace kerrspin {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct KeyValue {
    std::string value;
    bool used = false;
};

using SectionMap = std::map<std::string, std::map<std::string, KeyValue>>;

SectionMap tokenize(const std::string& text, const std::string& origin) {
    SectionMap out;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                std::ostringstream os;
                os << origin << ":" << lineno << ": malformed section header '" << line << "'";
                throw ConfigError(os.str());
            }
            section = trim(line.substr(1, line.size() - 2));
            out[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << origin << ":" << lineno << ": expected 'key = value', got '" << line << "'";
            throw ConfigError(os.str());
        }
        out[section][trim(line.substr(0, eq))] = {trim(line.substr(eq + 1)), false};
    }
    return out;
}

class Reader {
  public:
    Reader(SectionMap& m, std::string origin) : map_(m), origin_(std::move(origin)) {}

    bool has(const std::string& sec, const std::string& key) const {
        auto s = map_.find(sec);
        return s != map_.end() && s->second.count(key);
    }

    double number(const std::string& sec, const std::string& key, double fallback) {
        const std::string* raw = fetch(sec, key);
        if (!raw) return fallback;
        try {
            std::size_t pos = 0;
            const double v = std::stod(*raw, &pos);
            if (pos != raw->size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            fail(sec, key, *raw, "a number");
        }
        return fallback;  // unreachable
    }

    int integer(const std::string& sec, const std::string& key, int fallback) {
        const double v = number(sec, key, static_cast<double>(fallback));
        if (v != std::floor(v)) fail(sec, key, "", "an integer");
        return static_cast<int>(v);
    }

    std::string text(const std::string& sec, const std::string& key,
                     const std::string& fallback) {
        const std::string* raw = fetch(sec, key);
        return raw ? *raw : fallback;
    }

    Eigen::Vector3d vec3(const std::string& sec, const std::string& key,
                         const Eigen::Vector3d& fallback) {
        const std::string* raw = fetch(sec, key);
        if (!raw) return fallback;
        Eigen::Vector3d v;
        std::istringstream in(*raw);
        std::string part;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(in, part, ',')) fail(sec, key, *raw, "three comma-separated numbers");
            try {
                v(i) = std::stod(trim(part));
            } catch (const std::exception&) {
                fail(sec, key, *raw, "three comma-separated numbers");
            }
        }
        if (std::getline(in, part, ',')) fail(sec, key, *raw, "exactly three numbers");
        return v;
    }

    void finish() const {
        for (const auto& [sec, keys] : map_) {
            static const char* known[] = {"params", "constants", "initial",
                                          "run",    "spin",      "integrator"};
            bool ok = false;
            for (const char* k : known) ok = ok || sec == k;
            if (!ok) {
                throw ConfigError(origin_ + ": unknown section [" + sec + "]");
            }
            for (const auto& [key, kv] : keys) {
                if (!kv.used) {
                    throw ConfigError(origin_ + ": unknown key '" + key + "' in section [" +
                                      sec + "]");
                }
            }
        }
    }

  private:
    const std::string* fetch(const std::string& sec, const std::string& key) {
        auto s = map_.find(sec);
        if (s == map_.end()) return nullptr;
        auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        k->second.used = true;
        return &k->second.value;
    }

    [[noreturn]] void fail(const std::string& sec, const std::string& key,
                           const std::string& raw, const std::string& expect) const {
        std::ostringstream os;
        os << origin_ << ": [" << sec << "] " << key << ": expected " << expect;
        if (!raw.empty()) os << ", got '" << raw << "'";
        throw ConfigError(os.str());
    }

    SectionMap& map_;
    std::string origin_;
};

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& origin) {
    SectionMap map = tokenize(text, origin);
    Reader rd(map, origin);
    RunConfig c;
    c.M = rd.number("params", "M", c.M);
    c.a = rd.number("params", "a", c.a);
    c.E = rd.number("constants", "E", c.E);
    c.Lz = rd.number("constants", "Lz", c.Lz);
    c.kappa = rd.number("constants", "kappa", c.kappa);
    c.r0 = rd.number("initial", "r0", c.r0);
    c.theta0 = rd.number("initial", "theta0", c.theta0);
    c.phi0 = rd.number("initial", "phi0", c.phi0);
    c.sign_r = rd.integer("initial", "sign_r", c.sign_r);
    c.sign_theta = rd.integer("initial", "sign_theta", c.sign_theta);
    c.tau_max = rd.number("run", "tau_max", c.tau_max);
    c.tau_step = rd.number("run", "tau_step", c.tau_step);
    c.label = rd.text("run", "label", c.label);
    c.w0 = rd.vec3("spin", "W0", c.w0);
    const bool any_spinor = rd.has("spin", "c1_re") || rd.has("spin", "c1_im") ||
                            rd.has("spin", "c2_re") || rd.has("spin", "c2_im");
    if (any_spinor) {
        c.use_spinor_constants = true;
        c.c1 = {rd.number("spin", "c1_re", 1.0), rd.number("spin", "c1_im", 0.0)};
        c.c2 = {rd.number("spin", "c2_re", 0.0), rd.number("spin", "c2_im", 0.0)};
        c.d1 = {rd.number("spin", "d1_re", 0.0), rd.number("spin", "d1_im", 0.0)};
        c.d2 = {rd.number("spin", "d2_re", 0.0), rd.number("spin", "d2_im", 0.0)};
    }
    c.hbar = rd.number("spin", "hbar", c.hbar);
    c.rel_tol = rd.number("integrator", "rel_tol", c.rel_tol);
    c.abs_tol = rd.number("integrator", "abs_tol", c.abs_tol);
    c.max_step = rd.number("integrator", "max_step", c.max_step);
    c.chi0 = rd.number("integrator", "chi0", c.chi0);
    c.chi_d_sign = rd.integer("integrator", "chi_d_sign", c.chi_d_sign);
    rd.finish();
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

void RunConfig::validate() const {
    auto bad = [](const std::string& field, const std::string& why) {
        throw ConfigError("config field '" + field + "': " + why);
    };
    if (!(M > 0.0)) bad("params.M", "must be positive");
    if (!(a >= 0.0)) bad("params.a", "must be non-negative");
    if (!(M > a)) bad("params.a", "non-extreme case violated: requires M > a");
    if (!(kappa >= 0.0)) bad("constants.kappa", "must be non-negative");
    if (!(r0 > M + std::sqrt(M * M - a * a))) bad("initial.r0", "must lie outside the outer horizon");
    if (!(theta0 >= kPoleMargin && theta0 <= M_PI - kPoleMargin))
        bad("initial.theta0", "must lie in [1e-6, pi - 1e-6]");
    if (sign_r != 1 && sign_r != -1) bad("initial.sign_r", "must be +1 or -1");
    if (sign_theta != 1 && sign_theta != -1) bad("initial.sign_theta", "must be +1 or -1");
    if (!(tau_max >= 0.0)) bad("run.tau_max", "must be non-negative");
    if (!(tau_step > 0.0)) bad("run.tau_step", "must be positive");
    if (!(rel_tol > 0.0)) bad("integrator.rel_tol", "must be positive");
    if (!(abs_tol > 0.0)) bad("integrator.abs_tol", "must be positive");
    if (!(max_step > 0.0)) bad("integrator.max_step", "must be positive");
    if (chi_d_sign != 1 && chi_d_sign != -1) bad("integrator.chi_d_sign", "must be +1 or -1");
    if (use_spinor_constants) {
        if (!(std::norm(c1) + std::norm(c2) > 0.0))
            bad("spin.c1/c2", "|c1|^2 + |c2|^2 must be positive");
    } else if (!(w0.norm() > 0.0)) {
        bad("spin.W0", "must be a nonzero vector");
    }
}

IntegratorConfig RunConfig::integrator() const {
    IntegratorConfig ic;
    ic.rel_tol = rel_tol;
    ic.abs_tol = abs_tol;
    ic.max_step = max_step;
    ic.tau_max = tau_max;
    ic.tau_step = tau_step;
    ic.chi0 = chi0;
    ic.chi_d_sign = chi_d_sign;
    return ic;
}

RunConfig caption_preset(int which) {
    RunConfig c;
    c.M = 1.5;
    c.a = 0.8;
    c.r0 = 20.0;
    c.theta0 = 1.57;
    c.phi0 = 0.0;
    c.sign_theta = 1;
    // Tighter than the generic default: the published panels double as
    // validation fixtures, where conservation drift caps every downstream
    // residual.
    c.rel_tol = c.abs_tol = 1e-13;
    switch (which) {
        case 1:
            c.E = 2.0;
            c.Lz = 3.0;
            c.kappa = 12.0;
            c.sign_r = 1;
            c.label = "fig1";
            break;
        case 2:
            c.E = 1.004;
            c.Lz = -4.0;
            c.kappa = 60.0;
            c.sign_r = -1;
            c.label = "fig2";
            break;
        case 3:
            c.E = 1.004;
            c.Lz = 4.0;
            c.kappa = 16.0;
            c.sign_r = 1;
            c.label = "fig3";
            break;
        default:
            throw ConfigError("caption_preset: expected 1, 2 or 3");
    }
    return c;
}

}  // namespace kerrspin
