#include "lch/dga.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lch {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DuplicateId: return "DuplicateId";
        case Errc::InvalidId: return "InvalidId";
        case Errc::UnknownGenerator: return "UnknownGenerator";
        case Errc::UnknownGeneratorInDifferential: return "UnknownGeneratorInDifferential";
        case Errc::InhomogeneousDifferential: return "InhomogeneousDifferential";
        case Errc::SharedDegreeMismatch: return "SharedDegreeMismatch";
        case Errc::SharedDifferentialMismatch: return "SharedDifferentialMismatch";
        case Errc::SharedNotClosed: return "SharedNotClosed";
        case Errc::IdCollision: return "IdCollision";
        case Errc::MissingPairData: return "MissingPairData";
        case Errc::InvalidHandleIndex: return "InvalidHandleIndex";
        case Errc::InfiniteBasis: return "InfiniteBasis";
        case Errc::InvalidWindow: return "InvalidWindow";
        case Errc::InvalidAugmentation: return "InvalidAugmentation";
        case Errc::UnsupportedGrading: return "UnsupportedGrading";
        case Errc::MalformedEvent: return "MalformedEvent";
        case Errc::StrandCountViolation: return "StrandCountViolation";
        case Errc::OpenEnds: return "OpenEnds";
        case Errc::NotGradable: return "NotGradable";
        case Errc::InvalidTreeData: return "InvalidTreeData";
        case Errc::DegeneratePoint: return "DegeneratePoint";
        case Errc::NoRootInBracket: return "NoRootInBracket";
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UnclassifiedGenerator: return "UnclassifiedGenerator";
        case Errc::InvalidBundle: return "InvalidBundle";
    }
    return "Unknown";
}

namespace {

bool is_head(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_tail(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_valid_id(std::string_view id) {
    if (id.empty() || !is_head(id.front())) return false;
    std::size_t i = 1;
    while (i < id.size() && is_tail(id[i])) ++i;
    if (i == id.size()) return true;
    if (id[i] != '[' || id.back() != ']' || i + 2 >= id.size()) return false;
    for (std::size_t j = i + 1; j + 1 < id.size(); ++j)
        if (!is_tail(id[j])) return false;
    return true;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<std::string> f;
    f.reserve(factors_.size() + rhs.factors_.size());
    f.insert(f.end(), factors_.begin(), factors_.end());
    f.insert(f.end(), rhs.factors_.begin(), rhs.factors_.end());
    return Word(std::move(f));
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
    if (auto c = factors_.size() <=> rhs.factors_.size(); c != 0) return c;
    return factors_ <=> rhs.factors_;
}

std::string to_string(const Word& w) {
    if (w.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) out += '.';
        out += w.factors()[i];
    }
    return out;
}

Polynomial Polynomial::from_words(std::initializer_list<Word> words) {
    Polynomial p;
    for (const auto& w : words) p.toggle(w);
    return p;
}

void Polynomial::toggle(const Word& w) {
    auto [it, inserted] = terms_.insert(w);
    if (!inserted) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& w : rhs.terms_) toggle(w);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    out += rhs;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    Polynomial out;
    for (const auto& a : terms_)
        for (const auto& b : rhs.terms_) out.toggle(a * b);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& w : p.terms()) {
        if (!first) out += " + ";
        out += to_string(w);
        first = false;
    }
    return out;
}

std::set<std::string> support(const Polynomial& x) {
    std::set<std::string> ids;
    for (const auto& w : x.terms())
        for (const auto& f : w.factors()) ids.insert(f);
    return ids;
}

bool DgaPresentation::has_generator(std::string_view id) const {
    return index_.count(std::string(id)) != 0;
}

int DgaPresentation::degree(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw Error(Errc::UnknownGenerator, std::string(id));
    return generators_[it->second].degree;
}

const Polynomial& DgaPresentation::differential(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw Error(Errc::UnknownGenerator, std::string(id));
    return differentials_[it->second];
}

int DgaPresentation::degree(const Word& w) const {
    int d = 0;
    for (const auto& f : w.factors()) d += degree(f);
    return d;
}

std::optional<int> DgaPresentation::homogeneous_degree(const Polynomial& p) const {
    std::optional<int> d;
    for (const auto& w : p.terms()) {
        int dw = degree(w);
        if (d && *d != dw) return std::nullopt;
        d = dw;
    }
    return d;
}

bool DgaPresentation::operator==(const DgaPresentation& rhs) const {
    if (size() != rhs.size()) return false;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (!rhs.has_generator(g.id) || rhs.degree(g.id) != g.degree) return false;
        if (!(rhs.differential(g.id) == differentials_[i])) return false;
    }
    return true;
}

DgaPresentation build_presentation(std::span<const Generator> gens,
                                   const std::map<std::string, Polynomial>& diffs) {
    DgaPresentation p;
    for (const auto& g : gens) {
        if (!is_valid_id(g.id)) throw Error(Errc::InvalidId, "'" + g.id + "'");
        if (p.index_.count(g.id)) throw Error(Errc::DuplicateId, g.id);
        p.index_.emplace(g.id, p.generators_.size());
        p.generators_.push_back(g);
    }
    p.differentials_.assign(p.generators_.size(), Polynomial{});
    for (const auto& [id, poly] : diffs) {
        auto it = p.index_.find(id);
        if (it == p.index_.end())
            throw Error(Errc::UnknownGeneratorInDifferential, "differential given for undeclared '" + id + "'");
        for (const auto& f : support(poly))
            if (!p.index_.count(f))
                throw Error(Errc::UnknownGeneratorInDifferential, "'" + f + "' in d(" + id + ")");
        const int want = p.generators_[it->second].degree - 1;
        for (const auto& w : poly.terms()) {
            int dw = p.degree(w);
            if (dw != want) {
                std::ostringstream msg;
                msg << "term " << to_string(w) << " of d(" << id << ") has degree " << dw
                    << ", expected " << want;
                throw Error(Errc::InhomogeneousDifferential, msg.str());
            }
        }
        p.differentials_[it->second] = poly;
    }
    return p;
}

DgaPresentation build_presentation(std::initializer_list<Generator> gens,
                                   const std::map<std::string, Polynomial>& diffs) {
    return build_presentation(std::span<const Generator>(gens.begin(), gens.size()), diffs);
}

namespace {

// d(w) for a single word, accumulated into `out`.
void differentiate_word(const DgaPresentation& p, const Word& w, Polynomial& out) {
    const auto& f = w.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Polynomial& dg = p.differential(f[i]);
        if (dg.is_zero()) continue;
        std::vector<std::string> prefix(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<std::string> suffix(f.begin() + static_cast<std::ptrdiff_t>(i) + 1, f.end());
        Word left(std::move(prefix)), right(std::move(suffix));
        for (const auto& t : dg.terms()) out.toggle(left * t * right);
    }
}

}  // namespace

Polynomial apply_differential(const DgaPresentation& p, const Polynomial& x) {
    for (const auto& id : support(x))
        if (!p.has_generator(id)) throw Error(Errc::UnknownGenerator, id);
    Polynomial out;
    for (const auto& w : x.terms()) differentiate_word(p, w, out);
    return out;
}

DSquaredReport check_d_squared(const DgaPresentation& p) {
    DSquaredReport report;
    for (const auto& g : p.generators()) {
        Polynomial r = apply_differential(p, p.differential(g.id));
        if (!r.is_zero()) {
            report.pass = false;
            report.failures.push_back({g.id, std::move(r)});
        }
    }
    return report;
}

DgaPresentation pushout(const DgaPresentation& p1, const DgaPresentation& p2,
                        const std::set<std::string>& shared) {
    for (const auto& s : shared) {
        if (!p1.has_generator(s) || !p2.has_generator(s))
            throw Error(Errc::UnknownGenerator, "shared generator '" + s + "' is not declared in both presentations");
        if (p1.degree(s) != p2.degree(s)) {
            std::ostringstream msg;
            msg << "'" << s << "' has degree " << p1.degree(s) << " and " << p2.degree(s);
            throw Error(Errc::SharedDegreeMismatch, msg.str());
        }
        if (!(p1.differential(s) == p2.differential(s)))
            throw Error(Errc::SharedDifferentialMismatch,
                        "d(" + s + ") = " + to_string(p1.differential(s)) + " vs " +
                            to_string(p2.differential(s)));
        for (const auto& f : support(p1.differential(s)))
            if (!shared.count(f))
                throw Error(Errc::SharedNotClosed, "d(" + s + ") mentions non-shared '" + f + "'");
    }
    std::vector<Generator> gens;
    std::map<std::string, Polynomial> diffs;
    for (const auto& g : p1.generators()) {
        gens.push_back(g);
        diffs[g.id] = p1.differential(g.id);
    }
    for (const auto& g : p2.generators()) {
        if (shared.count(g.id)) continue;
        if (p1.has_generator(g.id))
            throw Error(Errc::IdCollision, "'" + g.id + "' is declared in both presentations but not shared");
        gens.push_back(g);
        diffs[g.id] = p2.differential(g.id);
    }
    auto out = build_presentation(gens, diffs);
    out.set_name(p1.name().empty() || p2.name().empty() ? p1.name() + p2.name()
                                                        : p1.name() + "_" + p2.name());
    return out;
}

DgaPresentation restrict_to(const DgaPresentation& p, const std::set<std::string>& ids) {
    std::vector<Generator> gens;
    std::map<std::string, Polynomial> diffs;
    for (const auto& id : ids)
        if (!p.has_generator(id)) throw Error(Errc::UnknownGenerator, id);
    for (const auto& g : p.generators()) {
        if (!ids.count(g.id)) continue;
        for (const auto& f : support(p.differential(g.id)))
            if (!ids.count(f))
                throw Error(Errc::SharedNotClosed, "d(" + g.id + ") mentions '" + f + "' outside the subset");
        gens.push_back(g);
        diffs[g.id] = p.differential(g.id);
    }
    return build_presentation(gens, diffs);
}

}  // namespace lch
