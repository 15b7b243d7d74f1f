#include "talex/presentation.hpp"

#include <cctype>
#include <sstream>

namespace talex {

void GroupPresentation::validate() const {
    if (generators < 0) throw InputError("negative generator count");
    for (const Word& r : relators)
        if (r.max_generator() >= generators)
            throw InputError("relator \"" + r.str() + "\" uses a generator outside the presentation");
    if (linking) {
        if (linking->rows() != linking->cols()) throw InputError("linking matrix must be square");
        for (Eigen::Index i = 0; i < linking->rows(); ++i) {
            if ((*linking)(i, i) != 0) throw InputError("linking matrix diagonal must vanish");
            for (Eigen::Index j = 0; j < i; ++j)
                if ((*linking)(i, j) != (*linking)(j, i))
                    throw InputError("linking matrix must be symmetric");
        }
    }
}

std::vector<long> AbelianizationMap::apply(const Word& w) const {
    std::vector<long> out(static_cast<std::size_t>(rank()), 0);
    for (const Letter& l : w.letters()) {
        if (l.gen >= generators()) throw InputError("word uses a generator outside the presentation");
        for (int i = 0; i < rank(); ++i) out[static_cast<std::size_t>(i)] += l.exp * images(i, l.gen);
    }
    return out;
}

AbelianizationMap abelianization(const GroupPresentation& p) {
    p.validate();
    int n = p.generators;
    int q = static_cast<int>(p.relators.size());
    MatI e = MatI::Zero(n, q);
    for (int k = 0; k < q; ++k) {
        auto sums = p.relators[static_cast<std::size_t>(k)].exponent_sums(n);
        for (int i = 0; i < n; ++i) e(i, k) = sums[static_cast<std::size_t>(i)];
    }
    IntSmithResult s = int_smith(e);
    int free_rank = n - s.rank;
    if (free_rank <= 0)
        throw HypothesisError("abelianization has trivial free part");
    MatI images(free_rank, n);
    for (int r = 0; r < free_rank; ++r)
        for (int j = 0; j < n; ++j) images(r, j) = s.U(s.rank + r, j);
    // Sign-normalize: first nonzero image entry of each coordinate positive.
    for (int r = 0; r < free_rank; ++r) {
        long lead = 0;
        for (int j = 0; j < n && lead == 0; ++j) lead = images(r, j);
        if (lead < 0)
            for (int j = 0; j < n; ++j) images(r, j) = -images(r, j);
    }
    AbelianizationMap phi{images};
    for (const Word& r : p.relators) {
        for (long v : phi.apply(r))
            if (v != 0) throw InternalError("abelianization does not kill a relator");
    }
    return phi;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("invalid integer '" + s + "' in " + what);
    }
}

} // namespace

GroupPresentation parse_presentation_text(const std::string& text) {
    GroupPresentation p;
    bool saw_gens = false;
    std::vector<char> gen_names;
    std::vector<std::string> relator_texts;
    std::vector<long> lk_values;
    bool saw_lk = false;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("presentation line without 'key: value': " + trim(raw));
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "gens") {
            if (saw_gens) throw InputError("duplicate gens line");
            saw_gens = true;
            std::istringstream vs(value);
            std::string tok;
            while (vs >> tok) {
                if (tok.size() != 1 || tok[0] < 'a' || tok[0] > 'z')
                    throw InputError("generator names must be single lowercase letters, got '" +
                                     tok + "'");
                for (char c : gen_names)
                    if (c == tok[0]) throw InputError(std::string("duplicate generator '") + tok[0] + "'");
                gen_names.push_back(tok[0]);
            }
        } else if (key == "rel") {
            relator_texts.push_back(value);
        } else if (key == "name") {
            p.name = value;
        } else if (key == "b0") {
            p.boundary_components = static_cast<int>(parse_long(value, "b0"));
        } else if (key == "x") {
            p.thurston_norm = static_cast<int>(parse_long(value, "x"));
        } else if (key == "lk") {
            saw_lk = true;
            std::istringstream vs(value);
            std::string tok;
            while (vs >> tok) lk_values.push_back(parse_long(tok, "lk"));
        } else {
            throw InputError("unknown presentation key '" + key + "'");
        }
    }
    if (!saw_gens) throw InputError("presentation needs a gens line");
    p.generators = static_cast<int>(gen_names.size());

    // Map the declared names to indices; words may use any declared letter.
    auto index_of = [&gen_names](char c, char base) {
        for (std::size_t i = 0; i < gen_names.size(); ++i)
            if (gen_names[i] == static_cast<char>(c - base + 'a')) return static_cast<int>(i);
        throw InputError(std::string("word uses undeclared generator '") + c + "'");
    };
    for (const std::string& rt : relator_texts) {
        std::vector<Letter> letters;
        for (char c : rt) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c >= 'a' && c <= 'z')
                letters.push_back({index_of(c, 'a'), 1});
            else if (c >= 'A' && c <= 'Z')
                letters.push_back({index_of(c, 'A'), -1});
            else
                throw InputError(std::string("invalid character '") + c + "' in relator");
        }
        p.relators.emplace_back(std::move(letters));
    }

    if (saw_lk) {
        // Upper triangle row-major: c components need c(c-1)/2 values.
        std::size_t len = lk_values.size();
        int c = 2;
        while (static_cast<std::size_t>(c) * (c - 1) / 2 < len) ++c;
        if (static_cast<std::size_t>(c) * (c - 1) / 2 != len)
            throw InputError("lk value count does not match any component count");
        MatI lk = MatI::Zero(c, c);
        std::size_t at = 0;
        for (int i = 0; i < c; ++i)
            for (int j = i + 1; j < c; ++j) {
                lk(i, j) = lk_values[at];
                lk(j, i) = lk_values[at];
                ++at;
            }
        p.linking = lk;
    }
    p.validate();
    return p;
}

std::string presentation_to_text(const GroupPresentation& p) {
    std::ostringstream out;
    if (p.name) out << "name: " << *p.name << "\n";
    out << "gens:";
    for (int i = 0; i < p.generators; ++i) {
        if (i > 25) throw InputError("cannot print generator index beyond 'z'");
        out << ' ' << static_cast<char>('a' + i);
    }
    out << "\n";
    for (const Word& r : p.relators) out << "rel: " << r.str() << "\n";
    if (p.boundary_components) out << "b0: " << *p.boundary_components << "\n";
    if (p.thurston_norm) out << "x: " << *p.thurston_norm << "\n";
    if (p.linking) {
        out << "lk:";
        for (Eigen::Index i = 0; i < p.linking->rows(); ++i)
            for (Eigen::Index j = i + 1; j < p.linking->cols(); ++j) out << ' ' << (*p.linking)(i, j);
        out << "\n";
    }
    return out.str();
}

} // namespace talex
