#include "talex/cli.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "talex/acceptance.hpp"
#include "talex/invariants.hpp"
#include "talex/sl2_enumerate.hpp"

namespace talex {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Index-ordered parallel map: results land at their index regardless of
// scheduling, so reports are identical for every --jobs value.
void parallel_for_index(int jobs, std::size_t n, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

template <class K>
Json indeterminacy_json(const Indeterminacy<K>& ind) {
    Json j;
    j["d"] = ind.d;
    j["sign_allowed"] = ind.sign_allowed;
    Json gens = Json::array();
    for (const K& g : ind.det_data.generators) gens.push_back(scalar_traits<K>::str(g));
    j["det_generators"] = std::move(gens);
    Json elems = Json::array();
    for (const K& e : ind.det_data.elements) elems.push_back(scalar_traits<K>::str(e));
    j["det_elements"] = std::move(elems);
    return j;
}

// Reports carry both the engine's representative and a canonical form
// (numerator and denominator each unit-normalized), so consumers never
// diff raw representatives across runs.
template <class K>
Json invariant_json(const TwistedAlexInvariant<K>& inv) {
    Json j;
    j["acyclic"] = inv.acyclic;
    j["zero"] = inv.representative.is_zero();
    j["numerator"] = inv.representative.num().str();
    j["denominator"] = inv.representative.den().str();
    if (!inv.representative.is_zero()) {
        j["canonical_numerator"] = unit_normalize(inv.representative.num()).canonical.str();
        j["canonical_denominator"] = unit_normalize(inv.representative.den()).canonical.str();
    }
    j["indeterminacy"] = indeterminacy_json(inv.indeterminacy);
    return j;
}

struct LoadedPresentation {
    GroupPresentation pres;
    Json input; // source descriptor for the report
};

LoadedPresentation load_presentation(const RunConfig& cfg) {
    if (cfg.knot.has_value() == cfg.presentation_path.has_value())
        throw InputError("exactly one input source is required: --knot NAME or "
                         "--presentation FILE");
    LoadedPresentation out;
    if (cfg.knot) {
        out.pres = knot_table(*cfg.knot);
        out.input["source"] = "table";
        out.input["name"] = *cfg.knot;
        out.input["hash"] = hash_hex(presentation_to_text(out.pres));
    } else {
        std::string text = read_text_file(*cfg.presentation_path);
        out.pres = parse_presentation_text(text);
        out.input["source"] = "file";
        out.input["path"] = *cfg.presentation_path;
        out.input["hash"] = hash_hex(text);
    }
    return out;
}

int require_b0(const GroupPresentation& p) {
    if (!p.boundary_components)
        throw InputError("presentation lacks boundary-component metadata (b0) required by "
                         "the symmetry check");
    return *p.boundary_components;
}

long require_norm(const GroupPresentation& p) {
    if (!p.thurston_norm)
        throw InputError("presentation lacks Thurston norm metadata (x) required by the "
                         "parity check");
    return *p.thurston_norm;
}

// The typed core of every single-representation command.
template <class K>
int run_typed(const RunConfig& cfg, const GroupPresentation& pres, const Representation<K>& alpha,
              Json& results) {
    alpha.validate(pres);
    AbelianizationMap phi = abelianization(pres);

    if (cfg.command == "orders") {
        auto d0 = alexander_order(pres, alpha, phi, 0);
        auto d1 = alexander_order(pres, alpha, phi, 1);
        results["order_0"] = d0.polynomial.is_zero() ? "0" : d0.polynomial.str();
        results["order_1"] = d1.polynomial.is_zero() ? "0" : d1.polynomial.str();
        if (!d0.polynomial.is_zero()) {
            RationalFunc<K> ratio = torsion_via_orders(pres, alpha, phi);
            results["ratio_numerator"] = ratio.num().str();
            results["ratio_denominator"] = ratio.den().str();
        }
        return 0;
    }

    TwistedAlexInvariant<K> inv = wada_invariant(pres, alpha, phi);
    results["invariant"] = invariant_json(inv);

    if (cfg.command == "compute") return 0;

    if (cfg.command == "check-symmetry") {
        // Establishing the theorem hypothesis is part of the report: is the
        // representation conjugate to its dual?
        auto dual = find_conjugation_to_dual(alpha);
        results["conjugate_to_dual"] = dual.witness.has_value();
        if (!dual.witness.has_value())
            results["duality_absence"] = dual.probabilistic_absence ? "sampled" : "certified";
        SymmetryReport<K> rep = symmetry_check(inv, alpha, phi, require_b0(pres), pres.linking);
        results["holds"] = rep.holds;
        results["inconclusive"] = rep.inconclusive;
        results["unit_coefficient"] = scalar_traits<K>::str(rep.unit_coefficient);
        Json exps = Json::array();
        for (std::int32_t e : rep.unit_exponents) exps.push_back(e);
        results["unit_exponents"] = std::move(exps);
        if (rep.charge_valid.has_value()) results["charge_valid"] = *rep.charge_valid;
        if (rep.holds) return 0;
        return rep.inconclusive ? 3 : 1;
    }

    if (cfg.command == "check-parity") {
        long x = require_norm(pres);
        bool ok = degree_parity_check(inv, alpha.dim, x);
        results["degree"] = degree_rational(inv.representative);
        results["d"] = alpha.dim;
        results["x"] = x;
        results["parity_holds"] = ok;
        return ok ? 0 : 1;
    }

    if (cfg.command == "palindrome") {
        auto form = palindromic_normalize(inv);
        if (!form) {
            results["palindromic"] = false;
            results["reason"] = "no shift makes the representative symmetric";
            return 1;
        }
        results["palindromic"] = true;
        results["shift"] = form->shift;
        Json coeffs = Json::array();
        for (const K& c : form->coeffs) coeffs.push_back(scalar_traits<K>::str(c));
        results["coefficients"] = std::move(coeffs);
        return 0;
    }

    throw InputError("unknown command \"" + cfg.command + "\"");
}

int run_enumerate(const RunConfig& cfg, const GroupPresentation& pres, Json& results) {
    if (!cfg.prime) throw InputError("enumerate requires --prime");
    std::vector<Sl2Rep> reps = enumerate_sl2_reps(pres, *cfg.prime);
    AbelianizationMap phi = abelianization(pres);

    std::vector<Json> rows(reps.size());
    std::atomic<long> irreducible{0}, acyclic{0};
    parallel_for_index(cfg.jobs, reps.size(), [&](std::size_t i) {
        const Representation<Fp>& alpha = reps[i].rep;
        Json row;
        row["index"] = i;
        Json mats = Json::array();
        for (const Mat<Fp>& m : alpha.images) {
            Json entries = Json::array();
            for (int r = 0; r < alpha.dim; ++r)
                for (int c = 0; c < alpha.dim; ++c) entries.push_back(m(r, c).str());
            mats.push_back(std::move(entries));
        }
        row["images"] = std::move(mats);
        row["irreducible"] = reps[i].irreducible;
        TwistedAlexInvariant<Fp> inv = wada_invariant(pres, alpha, phi);
        row["acyclic"] = inv.acyclic;
        if (inv.acyclic) {
            row["canonical_numerator"] = unit_normalize(inv.representative.num()).canonical.str();
            row["canonical_denominator"] =
                unit_normalize(inv.representative.den()).canonical.str();
        }
        if (reps[i].irreducible) irreducible.fetch_add(1);
        if (inv.acyclic) acyclic.fetch_add(1);
        rows[i] = std::move(row);
    });

    results["prime"] = *cfg.prime;
    results["total"] = reps.size();
    results["irreducible"] = irreducible.load();
    results["acyclic"] = acyclic.load();
    Json arr = Json::array();
    for (auto& r : rows) arr.push_back(std::move(r));
    results["representations"] = std::move(arr);
    return 0;
}

int run_selftest(Json& results) {
    std::vector<CriterionResult> rs = run_acceptance();
    bool all = true;
    Json arr = Json::array();
    for (const CriterionResult& r : rs) {
        Json row;
        row["criterion"] = r.id;
        row["name"] = r.name;
        row["status"] = r.pass ? "PASS" : "FAIL";
        row["detail"] = r.detail;
        arr.push_back(std::move(row));
        all = all && r.pass;
    }
    results["criteria"] = std::move(arr);
    results["all_pass"] = all;
    return all ? 0 : 1;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RepFileData parse_representation_text(const std::string& text) {
    RepFileData data;
    bool have_field = false, have_dim = false;
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        line = trimmed(line);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("representation file line " + std::to_string(line_no) +
                             ": expected \"key: value\"");
        std::string key = trimmed(line.substr(0, colon));
        std::string value = trimmed(line.substr(colon + 1));
        if (key == "field") {
            data.field = parse_field_spec(value);
            have_field = true;
        } else if (key == "dim") {
            auto toks = split_tokens(value);
            if (toks.size() != 1 || toks[0].find_first_not_of("0123456789") != std::string::npos)
                throw InputError("representation file line " + std::to_string(line_no) +
                                 ": dim must be a positive integer");
            data.dim = std::stoi(toks[0]);
            if (data.dim <= 0)
                throw InputError("representation file line " + std::to_string(line_no) +
                                 ": dim must be a positive integer");
            have_dim = true;
        } else if (key == "mat") {
            if (!have_dim)
                throw InputError("representation file line " + std::to_string(line_no) +
                                 ": dim must come before the first mat line");
            auto toks = split_tokens(value);
            if (static_cast<int>(toks.size()) != data.dim * data.dim)
                throw InputError("representation file line " + std::to_string(line_no) +
                                 ": expected " + std::to_string(data.dim * data.dim) +
                                 " row-major entries, got " + std::to_string(toks.size()));
            data.matrices.push_back(std::move(toks));
        } else {
            throw InputError("representation file line " + std::to_string(line_no) +
                             ": unknown key \"" + key + "\"");
        }
    }
    if (!have_field) throw InputError("representation file is missing its field line");
    if (!have_dim) throw InputError("representation file is missing its dim line");
    if (data.matrices.empty()) throw InputError("representation file has no mat lines");
    return data;
}

int run(const RunConfig& cfg, std::ostream& os) {
    Json report;
    report["command"] = cfg.command;
    int code = 0;
    try {
        if (cfg.command == "selftest") {
            if (cfg.knot || cfg.presentation_path || cfg.rep_path)
                throw InputError("selftest takes no input source");
            Json results;
            code = run_selftest(results);
            report["results"] = std::move(results);
        } else {
            LoadedPresentation loaded = load_presentation(cfg);
            report["input"] = loaded.input;
            report["jobs"] = cfg.jobs;
            Json results;
            if (cfg.command == "enumerate") {
                report["field"] = cfg.prime ? InvolutiveField{FieldKind::prime_field, *cfg.prime}.spec()
                                            : std::string("?");
                code = run_enumerate(cfg, loaded.pres, results);
            } else if (cfg.rep_path) {
                std::string rep_text = read_text_file(*cfg.rep_path);
                RepFileData data = parse_representation_text(rep_text);
                report["input"]["rep_path"] = *cfg.rep_path;
                report["input"]["rep_hash"] = hash_hex(rep_text);
                report["field"] = data.field.spec();
                switch (data.field.kind) {
                    case FieldKind::rationals:
                        code = run_typed<Rational>(cfg, loaded.pres,
                                                   realize_representation<Rational>(data), results);
                        break;
                    case FieldKind::prime_field:
                        code = run_typed<Fp>(cfg, loaded.pres, realize_representation<Fp>(data),
                                             results);
                        break;
                    case FieldKind::gaussian_rationals:
                        code = run_typed<GaussianRational>(
                            cfg, loaded.pres, realize_representation<GaussianRational>(data),
                            results);
                        break;
                }
            } else {
                InvolutiveField f = parse_field_spec(cfg.field);
                report["field"] = f.spec();
                int n = loaded.pres.generators;
                auto trivial = [&](auto k_tag) {
                    using K = decltype(k_tag);
                    Representation<K> r;
                    r.dim = 1;
                    r.field = f;
                    for (int i = 0; i < n; ++i)
                        r.images.push_back(Mat<K>(Mat<K>::Identity(1, 1)));
                    return r;
                };
                switch (f.kind) {
                    case FieldKind::rationals:
                        code = run_typed<Rational>(cfg, loaded.pres, trivial(Rational()), results);
                        break;
                    case FieldKind::prime_field: {
                        Representation<Fp> r;
                        r.dim = 1;
                        r.field = f;
                        for (int i = 0; i < n; ++i) {
                            Mat<Fp> m(1, 1);
                            m(0, 0) = Fp::make(1, f.p);
                            r.images.push_back(m);
                        }
                        code = run_typed<Fp>(cfg, loaded.pres, r, results);
                        break;
                    }
                    case FieldKind::gaussian_rationals:
                        code = run_typed<GaussianRational>(cfg, loaded.pres,
                                                           trivial(GaussianRational()), results);
                        break;
                }
            }
            report["results"] = std::move(results);
        }
    } catch (const Error& e) {
        report["error"] = e.what();
        code = 2;
    }
    report["exit"] = code;

    if (cfg.json_output)
        os << report.dump(2) << "\n";
    else
        os << render_text(report);
    if (cfg.out_path) {
        std::ofstream out(*cfg.out_path, std::ios::binary);
        if (!out) {
            os << "error: cannot write report to \"" << *cfg.out_path << "\"\n";
            return 2;
        }
        out << report.dump(2) << "\n";
    }
    return code;
}

} // namespace talex
