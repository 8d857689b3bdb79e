#include "qtoric/cohomology.hpp"

#include <sstream>

namespace qtoric {

BettiVector::BettiVector(std::vector<long long> entries) : b(std::move(entries)) {
    if (b.empty() || b.size() % 2 == 0)
        throw InternalError("Betti vector must have odd length b_0..b_{2n}");
    for (size_t i = 1; i < b.size(); i += 2)
        if (b[i] != 0) throw InternalError("odd Betti number b_" + std::to_string(i) + " nonzero");
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0) throw InternalError("negative Betti number");
    if (b.front() != 1) throw InternalError("b_0 != 1");
    if (b.back() != 1) throw InternalError("b_2n != 1");
}

std::string BettiVector::str() const {
    std::string out;
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(b[i]);
    }
    return out;
}

BettiVector bettiFromH(const HVector& h) {
    std::vector<long long> b(2 * h.h.size() - 1, 0);
    for (size_t j = 0; j < h.h.size(); ++j) b[2 * j] = h.h[j];
    return BettiVector(std::move(b));
}

MVResult mvFiltration(const MorseData& md, int n) {
    if (md.entries.size() < 2)
        throw InternalError("mvFiltration: need at least two vertices, got " +
                            std::to_string(md.entries.size()));
    if (md.entries.front().index != 0)
        throw InternalError("mvFiltration: first vertex has index " +
                            std::to_string(md.entries.front().index) + ", expected 0");
    MVResult res;
    std::vector<long long> even(static_cast<size_t>(n) + 1, 0);
    even[0] = 1; // W_1 = C^n/Gamma is contractible
    res.trace.push_back({1, even});
    for (size_t k = 2; k <= md.entries.size(); ++k) {
        const int idx = md.entries[k - 1].index;
        if (idx < 1 || idx > n)
            throw InternalError("mvFiltration: vertex " + std::to_string(k) + " has index " +
                                std::to_string(idx) + ", expected 1.." + std::to_string(n));
        ++even[static_cast<size_t>(idx)];
        res.trace.push_back({static_cast<int>(k), even});
    }
    std::vector<long long> b(2 * static_cast<size_t>(n) + 1, 0);
    for (size_t j = 0; j < even.size(); ++j) b[2 * j] = even[j];
    res.betti = BettiVector(std::move(b));
    return res;
}

long long eulerCharacteristic(const BettiVector& b) {
    long long chi = 0;
    for (size_t i = 0; i < b.b.size(); ++i) chi += (i % 2 == 0) ? b.b[i] : -b.b[i];
    return chi;
}

std::vector<long long> poincareCoefficients(const BettiVector& b) { return b.b; }

std::string poincareString(const BettiVector& b) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < b.b.size(); ++i) {
        if (b.b[i] == 0) continue;
        if (!first) out << " + ";
        if (i == 0)
            out << b.b[i];
        else {
            if (b.b[i] != 1) out << b.b[i];
            out << "t";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace qtoric
