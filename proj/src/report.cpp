#include "qgln/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

namespace qgln {

namespace {

using nlohmann::json;

bool pattern_fits(const std::vector<int>& pattern, int N) {
    for (int c : pattern)
        if (c > N - 1) return false;
    return true;
}

std::string pattern_str(const std::vector<int>& pattern) {
    std::string s;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pattern[i]);
    }
    return s;
}

json params_json(const CheckRecord& r) {
    json p;
    p["n"] = r.params.N;
    if (r.axes != CheckAxes::n_only) p["factors"] = r.params.factors;
    if (r.axes == CheckAxes::multiset) p["pattern"] = r.params.pattern;
    return p;
}

} // namespace

std::vector<std::vector<int>> all_patterns(int max_len, int max_colour) {
    std::vector<std::vector<int>> out;
    out.push_back({});
    std::vector<std::vector<int>> prev = {{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> cur;
        for (const auto& p : prev)
            for (int c = 1; c <= max_colour; ++c) {
                auto n = p;
                n.push_back(c);
                cur.push_back(n);
            }
        for (const auto& p : cur) out.push_back(p);
        prev = std::move(cur);
    }
    return out;
}

RunConfig default_config() {
    RunConfig c;
    c.ns = {2, 3};
    c.factor_counts = {1, 2};
    c.patterns = all_patterns(2, 2);
    c.trials = 5;
    for (const auto& info : check_catalog()) c.checks.push_back(info.name);
    return c;
}

Report run(const RunConfig& config) {
    RunConfig cfg = config;
    if (cfg.seeds.empty()) {
        if (cfg.trials < 1) throw ConfigInvalid("trials must be >= 1");
        for (int i = 1; i <= cfg.trials; ++i) cfg.seeds.push_back(static_cast<std::uint64_t>(i));
    }
    for (int n : cfg.ns)
        if (n < 2) throw ConfigInvalid("N must be >= 2");
    for (int f : cfg.factor_counts)
        if (f < 0) throw ConfigInvalid("factors must be >= 0");
    for (const auto& name : cfg.checks)
        if (!is_check_name(name)) throw ConfigInvalid("unknown check: " + name);
    if (cfg.patterns_explicit)
        for (const auto& pat : cfg.patterns)
            for (int n : cfg.ns)
                if (!pattern_fits(pat, n))
                    throw ConfigInvalid("pattern (" + pattern_str(pat) + ") has colours >= N for N=" + std::to_string(n));

    // deterministic job expansion: catalog order, then N, factors, pattern, seed
    Report report;
    report.config = cfg;
    for (const auto& info : check_catalog()) {
        if (std::find(cfg.checks.begin(), cfg.checks.end(), info.name) == cfg.checks.end()) continue;
        for (int n : cfg.ns) {
            std::vector<CheckParams> plist;
            switch (info.axes) {
                case CheckAxes::n_only: {
                    CheckParams p;
                    p.N = n;
                    p.factors = 0;
                    plist.push_back(p);
                    break;
                }
                case CheckAxes::module:
                    for (int f : cfg.factor_counts) {
                        CheckParams p;
                        p.N = n;
                        p.factors = f;
                        plist.push_back(p);
                    }
                    break;
                case CheckAxes::multiset:
                    for (int f : cfg.factor_counts)
                        for (const auto& pat : cfg.patterns) {
                            if (!pattern_fits(pat, n)) continue;
                            CheckParams p;
                            p.N = n;
                            p.factors = f;
                            p.pattern = pat;
                            plist.push_back(p);
                        }
                    break;
            }
            for (const auto& p : plist)
                for (std::uint64_t seed : cfg.seeds) {
                    CheckRecord rec;
                    rec.check = info.name;
                    rec.axes = info.axes;
                    rec.params = p;
                    rec.seed = seed;
                    auto t0 = std::chrono::steady_clock::now();
                    CheckOutcome outcome = run_check_with_retries(info.name, p, seed, cfg.retry_budget);
                    auto t1 = std::chrono::steady_clock::now();
                    rec.pass = outcome.pass;
                    rec.witness = outcome.witness;
                    rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
                    report.records.push_back(std::move(rec));
                }
        }
    }

    // stable report order regardless of execution order
    std::stable_sort(report.records.begin(), report.records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.check != b.check) return a.check < b.check;
        if (a.params.N != b.params.N) return a.params.N < b.params.N;
        if (a.params.factors != b.params.factors) return a.params.factors < b.params.factors;
        if (a.params.pattern != b.params.pattern) return a.params.pattern < b.params.pattern;
        return a.seed < b.seed;
    });
    return report;
}

std::string emit_text(const Report& report) {
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : report.records) {
        os << (r.pass ? "[ ok ] " : "[FAIL] ") << r.check << " n=" << r.params.N;
        if (r.axes != CheckAxes::n_only) os << " factors=" << r.params.factors;
        if (r.axes == CheckAxes::multiset) os << " pattern=(" << pattern_str(r.params.pattern) << ")";
        os << " seed=" << r.seed << " (" << r.millis << " ms)";
        if (!r.pass) {
            os << "\n       witness: " << r.witness;
            ++failed;
        }
        os << "\n";
    }
    os << (failed == 0 ? "PASS" : "FAIL") << ": " << (report.records.size() - static_cast<std::size_t>(failed)) << "/"
       << report.records.size() << " records passed\n";
    return os.str();
}

std::string emit_machine(const Report& report) {
    json doc;
    json cfg;
    cfg["n"] = report.config.ns;
    cfg["factors"] = report.config.factor_counts;
    json pats = json::array();
    for (const auto& p : report.config.patterns) pats.push_back(p);
    cfg["patterns"] = pats;
    cfg["seeds"] = report.config.seeds;
    cfg["trials"] = report.config.trials;
    cfg["checks"] = report.config.checks;
    doc["config"] = cfg;
    doc["overall_pass"] = report.overall();
    json records = json::array();
    for (const auto& r : report.records) {
        json rec;
        rec["check"] = r.check;
        rec["params"] = params_json(r);
        rec["seed"] = r.seed;
        rec["pass"] = r.pass;
        rec["witness"] = r.witness;
        rec["millis"] = 0; // fixed: machine reports are deterministic
        records.push_back(rec);
    }
    doc["records"] = records;
    return doc.dump(2) + "\n";
}

std::string compute_vector(const std::string& kind, const CheckParams& params, std::uint64_t seed, int retry_budget) {
    if (kind != "bethe" && kind != "projection") throw ConfigInvalid("compute kind must be bethe or projection");
    if (!params.valid()) throw ConfigInvalid("invalid compute parameters");
    PiMultiset I(params.pattern);
    KetVector vec;
    std::uint64_t used_seed = seed;
    bool done = false;
    for (int attempt = 0; attempt < retry_budget && !done; ++attempt) {
        used_seed = retry_seed(seed, attempt);
        try {
            SamplePoint sp = sample_point(used_seed, params.factors, I.size());
            ModuleShape mod{params.N, sp.z};
            vec = kind == "bethe" ? w_B(mod, sp.q, I, sp.t) : w_P(mod, sp.q, I, sp.t);
            done = true;
        } catch (const DegenerateSample&) {
            continue;
        }
    }
    if (!done) throw SamplingExhausted("compute: retry budget exhausted at seed " + std::to_string(seed));

    json doc;
    json cfg;
    cfg["n"] = params.N;
    cfg["factors"] = params.factors;
    cfg["pattern"] = params.pattern;
    cfg["seed"] = seed;
    cfg["sample_seed"] = used_seed;
    doc["config"] = cfg;
    doc["dim"] = vec.dim();
    json comps = json::array();
    for (int i = 0; i < vec.dim(); ++i) {
        if (vec[i].is_zero()) continue;
        json c;
        c["index"] = i;
        c["num"] = vec[i].num_str();
        c["den"] = vec[i].den_str();
        comps.push_back(c);
    }
    doc["components"] = comps;
    return doc.dump(2) + "\n";
}

} // namespace qgln
