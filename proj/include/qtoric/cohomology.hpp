#pragma once

// Betti numbers of the quasitoric space: closed form b_{2j} = h_j and the
// step-by-step Mayer-Vietoris filtration bookkeeping from the vertex order.

#include <string>
#include <vector>

#include "qtoric/combinatorics.hpp"

namespace qtoric {

struct BettiVector {
    std::vector<long long> b; // b_0..b_{2n}

    BettiVector() = default;
    explicit BettiVector(std::vector<long long> entries); // validates

    int n() const { return (static_cast<int>(b.size()) - 1) / 2; }
    std::string str() const;
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector bettiFromH(const HVector& h);

struct FiltrationState {
    int step;                    // k, 1..f_0
    std::vector<long long> even; // b_{2j}(W_k), j = 0..n
};

struct MVResult {
    BettiVector betti;
    std::vector<FiltrationState> trace;
};

// W_1 contributes b_0 = 1; every later vertex adds one rank in degree
// 2*ind(nu_k).
MVResult mvFiltration(const MorseData& md, int n);

long long eulerCharacteristic(const BettiVector& b);

std::vector<long long> poincareCoefficients(const BettiVector& b);
std::string poincareString(const BettiVector& b); // "1 + 2t^2 + t^4"

} // namespace qtoric
