/*
   Copyright 2026 The mrdcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mrd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <variant>

#include "mrd/curves.hpp"
#include "mrd/json_io.hpp"
#include "mrd/moore.hpp"
#include "mrd/verify.hpp"

namespace mrd::cli {

namespace {

using Code = std::variant<SupportCode, GeneralCode>;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json parse_json_arg(const std::string& arg, const char* what) {
    if (arg.empty()) throw UsageError(std::string("missing --") + what);
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw UsageError(std::string("cannot open --") + what + " file " + arg);
    return json::parse(in);
}

ScanOptions scan_options(const RunConfig& cfg) {
    ScanOptions opt;
    if (cfg.budget != 0) opt.budget = cfg.budget;
    opt.workers = cfg.workers;
    return opt;
}

bool has_tower_flags(const RunConfig& cfg) { return cfg.q != 0; }

TowerPtr tower_from_flags(const RunConfig& cfg) {
    if (cfg.q == 0) throw UsageError("missing --q");
    if (cfg.n == 0) throw UsageError("missing --n");
    const auto [p, e] = split_prime_power(cfg.q);
    if (cfg.e && *cfg.e != e) throw UsageError("--e does not match --q");
    return make_tower(p, e, cfg.n);
}

// A --code document may carry its own tower; it must then agree with any flags given.
TowerPtr resolve_tower(const RunConfig& cfg, const json* code_doc) {
    if (code_doc && code_doc->contains("tower")) {
        auto t = tower_from_json(code_doc->at("tower"));
        if (has_tower_flags(cfg)) {
            const auto flags = tower_from_flags(cfg);
            if (flags->p() != t->p() || flags->e() != t->e() || flags->n() != t->n())
                throw UsageError("--code tower disagrees with --q/--n");
        }
        return t;
    }
    return tower_from_flags(cfg);
}

Code resolve_code(const RunConfig& cfg, const TowerPtr& tower, const json* code_doc) {
    const int sources = int(code_doc != nullptr) + int(!cfg.T.empty()) + int(!cfg.family.empty());
    if (sources != 1) throw UsageError("give exactly one of --T, --family, --code");
    if (code_doc) return code_from_json(tower, code_doc->contains("code") ? code_doc->at("code") : *code_doc);
    if (!cfg.family.empty()) return named_family(cfg.family, tower, cfg.s);
    return SupportCode(tower, cfg.T, cfg.s);
}

json code_json(const Code& c) {
    return std::visit([](const auto& x) { return code_to_json(x); }, c);
}

class Writer {
public:
    Writer(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void emit(const json& j) {
        const std::string text = j.dump(2);
        out_ << text << '\n';
        if (!cfg_.out.empty()) {
            std::ofstream f(cfg_.out);
            if (!f) throw std::runtime_error("cannot write " + cfg_.out);
            f << text << '\n';
        }
    }

    void catalog(const json& j) {
        if (!catalog_) {
            const auto path = catalog_path(cfg_);
            catalog_.emplace(path, std::ios::app);
            if (!*catalog_) throw std::runtime_error("cannot append to catalog " + path.string());
        }
        *catalog_ << j.dump() << '\n';
        catalog_->flush();
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
    std::optional<std::ofstream> catalog_;
};

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::mrd: return kExitMrd;
        case Verdict::not_mrd: return kExitNotMrd;
        case Verdict::unknown: return kExitUnknown;
    }
    return kExitError;
}

int cmd_verify(const RunConfig& cfg, Writer& w) {
    std::optional<json> doc;
    if (!cfg.code.empty()) doc = parse_json_arg(cfg.code, "code");
    const auto tower = resolve_tower(cfg, doc ? &*doc : nullptr);
    const Code code = resolve_code(cfg, tower, doc ? &*doc : nullptr);
    const auto* support = std::get_if<SupportCode>(&code);
    if (!support) throw UsageError("verify needs a support code (kind \"support\")");
    const Certificate cert = verify_code(*support, scan_options(cfg));
    const json j = certificate_to_json(cert);
    w.emit(j);
    w.catalog(j);
    return verdict_exit(cert.verdict);
}

int cmd_classify(const RunConfig& cfg, Writer& w) {
    if (cfg.k == 0) throw UsageError("missing --k");
    const auto tower = tower_from_flags(cfg);
    ClassifyOptions opt;
    opt.scan = scan_options(cfg);
    const CandidateList list = classify(tower, cfg.k, opt);
    w.emit(candidate_list_to_json(*tower, list));
    for (const auto& e : list.entries)
        if (e.certificate) w.catalog(certificate_to_json(*e.certificate));
    return kExitMrd;
}

// Without a tower the support rules are applied directly: complement for the
// dual, t -> -t for the adjoint, twist unchanged.
std::vector<std::uint32_t> support_rule(const RunConfig& cfg, bool dual) {
    if (cfg.n == 0) throw UsageError("missing --n");
    if (std::gcd(cfg.s, cfg.n) != 1) throw UsageError("gcd(s, n) must be 1");
    std::vector<bool> in(cfg.n, false);
    for (auto t : cfg.T) {
        if (t >= cfg.n || in[t]) throw UsageError("--T entries must be distinct and below n");
        in[t] = true;
    }
    std::vector<std::uint32_t> r;
    for (std::uint32_t t = 0; t < cfg.n; ++t) {
        if (dual && !in[t]) r.push_back(t);
        if (!dual && in[t]) r.push_back((cfg.n - t) % cfg.n);
    }
    std::sort(r.begin(), r.end());
    if (r.empty()) throw UsageError("the dual of the full space is zero");
    return r;
}

int cmd_dual_adjoint(const RunConfig& cfg, Writer& w, bool dual) {
    json j;
    std::optional<json> doc;
    if (!cfg.code.empty()) doc = parse_json_arg(cfg.code, "code");
    const bool have_tower = has_tower_flags(cfg) || (doc && doc->contains("tower"));
    if (!have_tower) {
        if (cfg.T.empty()) throw UsageError("without --q give --T and --n");
        j["n"] = cfg.n;
        j["T"] = [&] {
            auto t = cfg.T;
            std::sort(t.begin(), t.end());
            return t;
        }();
        j["s"] = cfg.s;
        j["result"] = {{"kind", "support"}, {"T", support_rule(cfg, dual)}, {"s", cfg.s}};
        w.emit(j);
        return 0;
    }
    const auto tower = resolve_tower(cfg, doc ? &*doc : nullptr);
    const Code code = resolve_code(cfg, tower, doc ? &*doc : nullptr);
    j["tower"] = tower_to_json(*tower);
    j["code"] = code_json(code);
    j["result"] = std::visit(
        [dual](const auto& c) { return code_json(dual ? Code(delsarte_dual(c)) : Code(adjoint_code(c))); }, code);
    w.emit(j);
    return 0;
}

int cmd_idealiser(const RunConfig& cfg, Writer& w) {
    std::optional<json> doc;
    if (!cfg.code.empty()) doc = parse_json_arg(cfg.code, "code");
    const auto tower = resolve_tower(cfg, doc ? &*doc : nullptr);
    const Code code = resolve_code(cfg, tower, doc ? &*doc : nullptr);
    const GeneralCode g = std::visit(
        [](const auto& c) -> GeneralCode {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, SupportCode>)
                return to_general(c);
            else
                return c;
        },
        code);
    if (cfg.side != "left" && cfg.side != "right" && cfg.side != "both") throw UsageError("--side must be left, right or both");
    json j;
    j["tower"] = tower_to_json(*tower);
    j["code"] = code_json(code);
    if (cfg.side != "right") j["left"] = idealiser_to_json(idealiser(g, Side::left));
    if (cfg.side != "left") j["right"] = idealiser_to_json(idealiser(g, Side::right));
    w.emit(j);
    return 0;
}

int cmd_curve_count(const RunConfig& cfg, Writer& w) {
    const auto tower = tower_from_flags(cfg);
    const CurveCount cc = curve_count(tower, scan_options(cfg));
    json j = curve_count_to_json(*tower, cc);
    j["tower"] = tower_to_json(*tower);
    w.emit(j);
    return 0;
}

int cmd_moore_det(const RunConfig& cfg, Writer& w) {
    const auto tower = tower_from_flags(cfg);
    const FieldTower& F = *tower;
    const json jA = parse_json_arg(cfg.A, "A");
    if (!jA.is_array() || jA.empty()) throw UsageError("--A must be a nonempty array of coordinate arrays");
    std::vector<Fel> A;
    for (const auto& x : jA) A.push_back(element_from_json(F, x));
    std::vector<std::uint32_t> T = cfg.T;
    if (T.empty()) {
        T.resize(A.size());
        std::iota(T.begin(), T.end(), 0u);
    }
    if (T.size() != A.size()) throw UsageError("--T and --A must have the same length");
    const Fel det = moore_det(F, A, T, cfg.s);
    json j = moore_witness_json(F, A, T, cfg.s, det);
    j["fq_rank"] = fq_rank(F, A);
    j["vanishes"] = det.is_zero();
    w.emit(j);
    return 0;
}

int cmd_roots(const RunConfig& cfg, Writer& w) {
    const auto tower = tower_from_flags(cfg);
    const FieldTower& F = *tower;
    const LinPoly f = poly_from_json(tower, parse_json_arg(cfg.poly, "poly"));
    const std::size_t kd = kernel_dim(f);
    json j;
    j["poly"] = poly_to_json(f);
    j["rank"] = F.n() - kd;
    j["kernel_dim"] = kd;
    const auto basis = kernel_basis(f);
    j["kernel_basis"] = elements_to_json(F, basis);
    if (F.order() <= FieldTower::kEnumerationCap) {
        const auto r = roots(f);
        j["root_count"] = r.size();
        j["roots"] = elements_to_json(F, r);
    }
    w.emit(j);
    return 0;
}

}  // namespace

std::filesystem::path catalog_path(const RunConfig& cfg) {
    if (!cfg.catalog.empty()) return cfg.catalog;
    if (const char* env = std::getenv("MRD_CATALOG"); env && *env) return env;
    return kDefaultCatalog;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Writer w(cfg, out);
    try {
        if (cfg.command == "verify") return cmd_verify(cfg, w);
        if (cfg.command == "classify") return cmd_classify(cfg, w);
        if (cfg.command == "dual") return cmd_dual_adjoint(cfg, w, true);
        if (cfg.command == "adjoint") return cmd_dual_adjoint(cfg, w, false);
        if (cfg.command == "idealiser") return cmd_idealiser(cfg, w);
        if (cfg.command == "curve-count") return cmd_curve_count(cfg, w);
        if (cfg.command == "moore-det") return cmd_moore_det(cfg, w);
        if (cfg.command == "roots") return cmd_roots(cfg, w);
        throw UsageError("unknown command " + cfg.command);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitError;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Rank-metric code tools over F_{q^n}: MRD verification, duals, idealisers, curve counts."};
    app.require_subcommand(1);

    auto tower_opts = [&](CLI::App* sub) {
        sub->add_option("--q", cfg.q, "Field size q = p^e of the base field")->check(CLI::PositiveNumber);
        sub->add_option("--e", cfg.e, "Optional check that q = p^e");
        sub->add_option("--n", cfg.n, "Extension degree of F_{q^n} over F_q")->check(CLI::PositiveNumber);
    };
    auto code_opts = [&](CLI::App* sub) {
        sub->add_option("--T", cfg.T, "Support, comma separated")->delimiter(',');
        sub->add_option("--s", cfg.s, "Twist s with gcd(s, n) = 1");
        sub->add_option("--family", cfg.family, "C7, C7', C8, C8', Cn or Ds");
        sub->add_option("--code", cfg.code, "Code as JSON text or a JSON file");
    };
    auto scan_opts = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "Scan budget (default 2^28)")->check(CLI::PositiveNumber);
        sub->add_option("--workers", cfg.workers, "Worker threads (default: hardware threads)")->check(CLI::PositiveNumber);
    };
    auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Also write the JSON result here"); };
    auto catalog_opt = [&](CLI::App* sub) {
        sub->add_option("--catalog", cfg.catalog, "JSON-lines catalog (else $MRD_CATALOG, else mrd_catalog.jsonl)");
    };

    auto* verify = app.add_subcommand("verify", "Decide whether a code is MRD; exit 0 MRD, 1 NOT_MRD, 2 UNKNOWN");
    tower_opts(verify), code_opts(verify), scan_opts(verify), out_opt(verify), catalog_opt(verify);

    auto* cls = app.add_subcommand("classify", "All k-subsets of Z_n up to shift with verdicts");
    tower_opts(cls), scan_opts(cls), out_opt(cls), catalog_opt(cls);
    cls->add_option("--k", cfg.k, "Code dimension")->required();

    for (const char* name : {"dual", "adjoint"}) {
        auto* sub = app.add_subcommand(name, std::string(name == std::string("dual") ? "Delsarte dual" : "Adjoint code"));
        tower_opts(sub), code_opts(sub), out_opt(sub);
    }

    auto* ideal = app.add_subcommand("idealiser", "Left and right idealisers");
    tower_opts(ideal), code_opts(ideal), out_opt(ideal);
    ideal->add_option("--side", cfg.side, "left, right or both");

    auto* curve = app.add_subcommand("curve-count", "Point counts on the curves H, W and V");
    tower_opts(curve), scan_opts(curve), out_opt(curve);

    auto* moore = app.add_subcommand("moore-det", "Moore determinant of elements given as coordinate arrays");
    tower_opts(moore), out_opt(moore);
    moore->add_option("--A", cfg.A, "JSON array of coordinate arrays")->required();
    moore->add_option("--T", cfg.T, "Exponents (default 0..k-1)")->delimiter(',');
    moore->add_option("--s", cfg.s, "Twist");

    auto* rts = app.add_subcommand("roots", "Kernel of a linearized polynomial");
    tower_opts(rts), out_opt(rts);
    rts->add_option("--poly", cfg.poly, "Polynomial as JSON text or file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return run(cfg, out, err);
}

}  // namespace mrd::cli
