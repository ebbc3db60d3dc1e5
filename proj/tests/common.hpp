#pragma once

#include "eic/problem.hpp"

namespace eic::testing {

// Two nodes swapping blocks: node 0 has b1 needs b0, node 1 has b0 needs b1.
inline EicProblem swap2() {
    return {2, 2, BitMatrix::from_strings({"01", "10"}),
            BitMatrix::from_strings({"10", "01"})};
}

// Node i needs block i and has both other blocks.
inline EicProblem clique3() {
    return {3, 3, BitMatrix::from_strings({"011", "101", "110"}),
            BitMatrix::from_strings({"100", "010", "001"})};
}

// Node i needs block i and has block (i+1) mod 3.
inline EicProblem cycle3() {
    return {3, 3, BitMatrix::from_strings({"010", "001", "100"}),
            BitMatrix::from_strings({"100", "010", "001"})};
}

// Four nodes u,w,x,y = 0..3 over blocks D1..D4 = 0..3: u needs D2 has
// {D1,D4}; w needs D1 has {D2}; x needs D3 has {D2}; y needs D4 has
// {D1,D2,D3}.
inline EicProblem hub4() {
    return {4, 4, BitMatrix::from_strings({"1001", "0100", "0100", "1110"}),
            BitMatrix::from_strings({"0100", "1000", "0010", "0001"})};
}

}  // namespace eic::testing
