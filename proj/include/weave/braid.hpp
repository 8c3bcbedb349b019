#pragma once

#include <string>
#include <vector>

namespace weave {

// Positive braid word on N strands; letters are generator indices 1..N-1.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> w);

    std::size_t size() const { return letters.size(); }
    bool operator==(const BraidWord&) const = default;
    std::string str() const;  // "s1 s2 s2" style, "e" when empty
    static BraidWord parse(int strands, const std::string& s);
};

// sigma2 sigma1^{a+1} sigma2 sigma1^{b+1} sigma2 sigma1^{c+1}
BraidWord tripod_boundary(int a, int b, int c);
// sigma1^{n+3}
BraidWord linear_boundary(int n);
// sigma1 sigma2^a sigma1^{b-1} sigma2^c
BraidWord brick_word(int a, int b, int c);

}  // namespace weave
