#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlib/constructions.hpp"
#include "ringlib/exponent.hpp"
#include "ringlib/ideal.hpp"
#include "ringlib/parser.hpp"
#include "ringlib/ring.hpp"

using json = nlohmann::ordered_json;
using namespace rings;

namespace {

struct Options {
    std::uint64_t cap = kDefaultCap;
    std::string format = "text";
    bool quiet = false;
};

// exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kResourceCap = 3;

void emit(const Options& opt, const json& doc) {
    if (opt.quiet) return;
    if (opt.format == "machine") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // text mode: flat key: value lines, depth-first
    std::function<void(const std::string&, const json&)> walk =
        [&](const std::string& prefix, const json& v) {
            if (v.is_object()) {
                for (auto it = v.begin(); it != v.end(); ++it)
                    walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
            } else if (v.is_array()) {
                std::string line;
                for (const auto& item : v) {
                    if (!line.empty()) line += ", ";
                    line += item.is_string() ? item.get<std::string>() : item.dump();
                }
                std::cout << prefix << ": [" << line << "]\n";
            } else if (v.is_string()) {
                std::cout << prefix << ": " << v.get<std::string>() << "\n";
            } else {
                std::cout << prefix << ": " << v.dump() << "\n";
            }
        };
    walk("", doc);
}

json order_histogram(const Ring& ring, const std::vector<Element>& units,
                     std::uint64_t cap) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (const Element& u : units) ++hist[*ring.mult_order(u, cap)];
    json h = json::object();
    for (const auto& [order, count] : hist) h[std::to_string(order)] = count;
    return h;
}

CncResult chain_from_spec(const RingPtr& ring, const std::string& spec,
                          std::uint64_t cap) {
    std::vector<Ideal> ideals;
    for (const auto& gens : parse_chain_spec(ring, spec))
        ideals.push_back(ideal_from_generators(*ring, gens, cap));
    ideals.push_back(zero_ideal(*ring));
    return verify_cnc(*ring, std::move(ideals), cap);
}

json chain_json(const CncChain& chain) {
    json ideals = json::array();
    for (const Ideal& ideal : chain.ideals) {
        ideals.push_back(
            {{"label", ideal.label()}, {"size", ideal.size()}});
    }
    return {{"verified", chain.verified},
            {"length", chain.length()},
            {"ideals", ideals},
            {"nilpotency_indexes", chain.nilpotency},
            {"characteristics", chain.characteristic}};
}

json failure_json(const Ring& ring, const CncFailure& failure) {
    json j = {{"verified", false},
              {"failed_condition", to_string(failure.condition)},
              {"step", failure.step},
              {"detail", failure.detail}};
    if (failure.witness) j["witness"] = ring.format(*failure.witness);
    return j;
}

json report_json(const ExponentReport& rep) {
    json verdicts = json::object();
    for (const auto& [k, v] : rep.verdicts) verdicts[k] = to_string(v);
    json j = {{"ring", rep.ring_name}};
    if (rep.unit_count) j["unit_count"] = *rep.unit_count;
    if (rep.ring_order) j["ring_order"] = *rep.ring_order;
    j["w"] = rep.w;
    j["w_mode"] = to_string(rep.w_mode);
    if (rep.m1) j["M1"] = *rep.m1;
    if (rep.m2) j["M2"] = *rep.m2;
    if (rep.m3) j["M3"] = *rep.m3;
    j["verdicts"] = verdicts;
    j["M1_divides_M2"] = rep.m1_divides_m2;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"finite-ring exponent bounds with brute-force verification"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--cap", opt.cap, "enumeration cap (elements)");
    app.add_option("--format", opt.format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--quiet", opt.quiet, "suppress report output");

    std::string ring_text, chain_spec, gen_spec, w_mode_text = "ring_order";
    std::vector<std::string> euler_args;
    std::uint64_t p = 2, k = 2, deg = 5, count = 1000, seed = 42;

    auto* info = app.add_subcommand("info", "cardinality, unit count, ring order");
    info->add_option("ring", ring_text)->required();

    auto* units_cmd = app.add_subcommand("units", "unit list and order histogram");
    units_cmd->add_option("ring", ring_text)->required();

    auto* cnc = app.add_subcommand("cnc", "CNC chain verification");
    auto* cnc_verify = cnc->add_subcommand("verify", "verify an explicit chain");
    cnc_verify->add_option("ring", ring_text)->required();
    cnc_verify->add_option("--chain", chain_spec, "generator lists, ';'-separated")
        ->required();
    auto* cnc_auto = cnc->add_subcommand("auto", "power chain of an ideal");
    cnc_auto->add_option("ring", ring_text)->required();
    cnc_auto->add_option("--gen", gen_spec, "ideal generators")->required();

    auto* bounds = app.add_subcommand("bounds", "Fermat-type exponent bounds M1/M2/M3");
    bounds->add_option("ring", ring_text)->required();
    bounds->add_option("--chain", chain_spec)->required();
    bounds->add_option("--w-mode", w_mode_text)
        ->check(CLI::IsMember({"ring_order", "unit_count"}));

    auto* euler = app.add_subcommand("euler", "combined exponent over ring/chain pairs");
    euler->add_option("pairs", euler_args, "ring1 chain1 ring2 chain2 ...")->required();

    auto* sample = app.add_subcommand("sample-poly", "sampled verification in Z/p^k[x]");
    sample->add_option("--p", p)->required();
    sample->add_option("--k", k)->required();
    sample->add_option("--deg", deg);
    sample->add_option("--count", count);
    sample->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    if (info->parsed()) {
        RingPtr ring = parse_ring_expr(ring_text).ring;
        json j = {{"command", "info"}, {"ring", ring->name()}};
        auto card = ring->cardinality();
        j["cardinality"] = card ? json(*card) : json("infinite");
        if (card && *card <= opt.cap) {
            j["unit_count"] = ring->units(opt.cap).size();
            j["ring_order"] = ring_order(*ring, opt.cap);
        }
        emit(opt, j);
        return kOk;
    }

    if (units_cmd->parsed()) {
        RingPtr ring = parse_ring_expr(ring_text).ring;
        auto units = ring->units(opt.cap);
        json j = {{"command", "units"}, {"ring", ring->name()},
                  {"unit_count", units.size()}};
        json list = json::array();
        for (const Element& u : units) list.push_back(ring->format(u));
        if (opt.format == "machine" || units.size() <= 64) j["units"] = list;
        else j["units"] = "(elided, " + std::to_string(units.size()) + " entries)";
        j["order_histogram"] = order_histogram(*ring, units, opt.cap);
        emit(opt, j);
        return kOk;
    }

    if (cnc_verify->parsed() || cnc_auto->parsed()) {
        RingPtr ring = parse_ring_expr(ring_text).ring;
        CncResult result =
            cnc_verify->parsed()
                ? chain_from_spec(ring, chain_spec, opt.cap)
                : power_chain(*ring, parse_chain_spec(ring, gen_spec).at(0), opt.cap);
        json j = {{"command", cnc_verify->parsed() ? "cnc verify" : "cnc auto"},
                  {"ring", ring->name()}};
        if (auto* chain = std::get_if<CncChain>(&result)) {
            j["chain"] = chain_json(*chain);
            emit(opt, j);
            return kOk;
        }
        j["chain"] = failure_json(*ring, std::get<CncFailure>(result));
        emit(opt, j);
        return kVerificationFailure;
    }

    if (bounds->parsed()) {
        RingPtr ring = parse_ring_expr(ring_text).ring;
        CncResult result = chain_from_spec(ring, chain_spec, opt.cap);
        if (auto* failure = std::get_if<CncFailure>(&result)) {
            json j = {{"command", "bounds"},
                      {"ring", ring->name()},
                      {"chain", failure_json(*ring, *failure)}};
            emit(opt, j);
            return kVerificationFailure;
        }
        const CncChain& chain = std::get<CncChain>(result);
        WMode mode = w_mode_text == "unit_count" ? WMode::unit_count : WMode::ring_order;
        ExponentReport rep = fermat_bounds(ring, chain, mode, opt.cap);
        json j = {{"command", "bounds"}, {"chain", chain_json(chain)}};
        j.update(report_json(rep));
        emit(opt, j);
        return rep.all_verified() ? kOk : kVerificationFailure;
    }

    if (euler->parsed()) {
        if (euler_args.size() < 2 || euler_args.size() % 2 != 0)
            throw PreconditionFailed("euler expects ring/chain argument pairs");
        std::vector<EulerEntry> entries;
        json inputs = json::array();
        for (std::size_t i = 0; i < euler_args.size(); i += 2) {
            RingPtr ring = parse_ring_expr(euler_args[i]).ring;
            CncResult result = chain_from_spec(ring, euler_args[i + 1], opt.cap);
            if (auto* failure = std::get_if<CncFailure>(&result)) {
                json j = {{"command", "euler"},
                          {"ring", ring->name()},
                          {"chain", failure_json(*ring, *failure)}};
                emit(opt, j);
                return kVerificationFailure;
            }
            inputs.push_back(ring->name());
            entries.push_back({ring, std::get<CncChain>(std::move(result))});
        }
        EulerReport rep = euler_lcm(entries, opt.cap);
        json j = {{"command", "euler"},
                  {"rings", inputs},
                  {"m_values", rep.m_values},
                  {"M_lcm", rep.lcm},
                  {"M_product", rep.product},
                  {"lcm_oracle", to_string(rep.lcm_oracle)},
                  {"product_oracle", to_string(rep.product_oracle)}};
        emit(opt, j);
        bool ok = rep.lcm_oracle != Verdict::failed && rep.product_oracle != Verdict::failed;
        return ok ? kOk : kVerificationFailure;
    }

    if (sample->parsed()) {
        SampleReport rep = sample_polynomial_units(p, k, deg, count, seed);
        json j = {{"command", "sample-poly"},
                  {"ring", rep.ring->name()},
                  {"p", rep.p},
                  {"k", rep.k},
                  {"degree_bound", rep.degree_bound},
                  {"sample_count", rep.sample_count},
                  {"seed", rep.seed},
                  {"exponent", rep.exponent},
                  {"failure_count", rep.failures.size()}};
        json failures = json::array();
        for (const Element& g : rep.failures) failures.push_back(rep.ring->format(g));
        j["failures"] = failures;
        emit(opt, j);
        return rep.failures.empty() ? kOk : kVerificationFailure;
    }

    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
        return kResourceCap;
    } catch (const InfiniteRing& e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
        return kResourceCap;
    } catch (const RingError& e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
