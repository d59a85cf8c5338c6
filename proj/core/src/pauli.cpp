#include "vqebench/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "vqebench/errors.hpp"

namespace vqebench {

namespace {
constexpr int kMaxQubits = 24;
constexpr double kMergeTolerance = 1e-14;
}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_mask_(x_mask), z_mask_(z_mask) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ConfigError("PauliString: n_qubits out of range [1, 24]");
    const std::uint64_t valid = (n_qubits == 64) ? ~0ULL : ((1ULL << n_qubits) - 1);
    if ((x_mask & ~valid) || (z_mask & ~valid))
        throw IndexError("PauliString: mask bit beyond register size");
}

PauliString PauliString::from_letters(std::string_view letters) {
    if (letters.empty()) throw ConfigError("PauliString: empty letter string");
    std::uint64_t x = 0, z = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        switch (letters[k]) {
            case 'I': break;
            case 'X': x |= 1ULL << k; break;
            case 'Y': x |= 1ULL << k; z |= 1ULL << k; break;
            case 'Z': z |= 1ULL << k; break;
            default:
                throw ConfigError(std::string("PauliString: invalid letter '") +
                                  letters[k] + "'");
        }
    }
    return PauliString(static_cast<int>(letters.size()), x, z);
}

char PauliString::letter(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) throw IndexError("PauliString: qubit out of range");
    const bool x = (x_mask_ >> qubit) & 1;
    const bool z = (z_mask_ >> qubit) & 1;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

std::string PauliString::letters() const {
    std::string s(static_cast<std::size_t>(n_qubits_), 'I');
    for (int k = 0; k < n_qubits_; ++k) s[static_cast<std::size_t>(k)] = letter(k);
    return s;
}

std::vector<int> PauliString::support() const {
    std::vector<int> idx;
    for (int k = 0; k < n_qubits_; ++k)
        if (((x_mask_ | z_mask_) >> k) & 1) idx.push_back(k);
    return idx;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ConfigError("PauliSum: n_qubits out of range [1, 24]");
}

PauliSum::PauliSum(int n_qubits, std::vector<Term> terms) : PauliSum(n_qubits) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> merged;
    for (const auto& t : terms) {
        if (t.string.n_qubits() != n_qubits)
            throw ShapeError("PauliSum: term qubit count mismatch");
        if (!std::isfinite(t.coefficient))
            throw ConfigError("PauliSum: non-finite coefficient");
        merged[{t.string.x_mask(), t.string.z_mask()}] += t.coefficient;
    }
    for (const auto& [masks, c] : merged) {
        if (std::abs(c) < kMergeTolerance) continue;
        terms_.push_back({c, PauliString(n_qubits, masks.first, masks.second)});
    }
}

void PauliSum::apply(std::span<const std::complex<double>> v,
                     std::span<std::complex<double>> out) const {
    const std::size_t dim = 1ULL << n_qubits_;
    if (v.size() != dim || out.size() != dim)
        throw ShapeError("PauliSum::apply: dimension mismatch");
    std::ranges::fill(out, std::complex<double>{0.0, 0.0});
    for (const auto& term : terms_) {
        const std::uint64_t x = term.string.x_mask();
        const std::uint64_t z = term.string.z_mask();
        // P|b> = i^{#Y} (-1)^{popcount(b & z)} |b ^ x>
        const int n_y = std::popcount(x & z);
        static constexpr std::complex<double> kIPow[4] = {
            {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const std::complex<double> scale = term.coefficient * kIPow[n_y & 3];
        for (std::uint64_t b = 0; b < dim; ++b) {
            const double sign = (std::popcount(b & z) & 1) ? -1.0 : 1.0;
            out[b ^ x] += scale * sign * v[b];
        }
    }
}

namespace {

bool parse_coefficient(std::string_view tok, double& value) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

PauliSum parse_hamiltonian(std::istream& in) {
    std::vector<PauliSum::Term> terms;
    int n_qubits = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string coef_tok, letters, extra;
        if (!(ls >> coef_tok)) continue;  // blank or comment-only line
        if (!(ls >> letters)) throw ParseError("missing Pauli letters", line_no);
        if (ls >> extra) throw ParseError("trailing content after term", line_no);
        double coef = 0.0;
        if (!parse_coefficient(coef_tok, coef) || !std::isfinite(coef))
            throw ParseError("invalid coefficient '" + coef_tok + "'", line_no);
        if (n_qubits == 0) {
            n_qubits = static_cast<int>(letters.size());
            if (n_qubits > kMaxQubits)
                throw ParseError("Pauli string longer than 24 qubits", line_no);
        } else if (static_cast<int>(letters.size()) != n_qubits) {
            throw ParseError("inconsistent Pauli string length", line_no);
        }
        try {
            terms.push_back({coef, PauliString::from_letters(letters)});
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (n_qubits == 0) throw ParseError("no terms found", line_no);
    return PauliSum(n_qubits, std::move(terms));
}

PauliSum parse_hamiltonian_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open Hamiltonian file: " + path);
    return parse_hamiltonian(in);
}

void write_hamiltonian(std::ostream& out, const PauliSum& h) {
    out.precision(17);
    for (const auto& term : h.terms())
        out << term.coefficient << ' ' << term.string.letters() << '\n';
}

void write_hamiltonian_file(const std::string& path, const PauliSum& h) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open file for writing: " + path);
    write_hamiltonian(out, h);
}

PauliSum extract_local(const PauliSum& h) {
    std::vector<PauliSum::Term> kept;
    for (const auto& term : h.terms()) {
        const auto supp = term.string.support();
        if (supp.size() <= 1 ||
            (supp.size() == 2 && supp[1] - supp[0] == 1)) {
            kept.push_back(term);
        }
    }
    return PauliSum(h.n_qubits(), std::move(kept));
}

PauliSum interpolate(const PauliSum& h_local, const PauliSum& h_global, double s) {
    if (h_local.n_qubits() != h_global.n_qubits())
        throw ShapeError("interpolate: qubit count mismatch");
    if (!(s >= 0.0 && s <= 1.0))
        throw ConfigError("interpolate: s must lie in [0, 1]");
    std::vector<PauliSum::Term> terms;
    for (const auto& t : h_local.terms()) terms.push_back({(1.0 - s) * t.coefficient, t.string});
    for (const auto& t : h_global.terms()) terms.push_back({s * t.coefficient, t.string});
    return PauliSum(h_local.n_qubits(), std::move(terms));
}

PauliSum builtin_hamiltonian(const std::string& name, int n_qubits,
                             const SpinModelParams& params) {
    if (n_qubits < 2) throw ConfigError("builtin_hamiltonian: n_qubits must be >= 2");
    std::vector<PauliSum::Term> terms;
    auto two_site = [&](int i, char letter, double coef) {
        std::string s(static_cast<std::size_t>(n_qubits), 'I');
        s[static_cast<std::size_t>(i)] = letter;
        s[static_cast<std::size_t>(i + 1)] = letter;
        terms.push_back({coef, PauliString::from_letters(s)});
    };
    if (name == "transverse_field_ising") {
        for (int i = 0; i + 1 < n_qubits; ++i) two_site(i, 'Z', -params.J);
        for (int i = 0; i < n_qubits; ++i) {
            std::string s(static_cast<std::size_t>(n_qubits), 'I');
            s[static_cast<std::size_t>(i)] = 'X';
            terms.push_back({-params.h, PauliString::from_letters(s)});
        }
    } else if (name == "heisenberg_xxz") {
        for (int i = 0; i + 1 < n_qubits; ++i) {
            two_site(i, 'X', params.J);
            two_site(i, 'Y', params.J);
            two_site(i, 'Z', params.J * params.delta);
        }
    } else {
        throw ConfigError("builtin_hamiltonian: unknown model '" + name + "'");
    }
    return PauliSum(n_qubits, std::move(terms));
}

}  // namespace vqebench
