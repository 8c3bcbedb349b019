#include "weave/braid.hpp"

#include <sstream>

#include "weave/errors.hpp"

namespace weave {

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (n < 1) throw InvalidArgument("braid needs at least one strand");
    for (int x : letters)
        if (x < 1 || x >= n) throw InvalidArgument("braid letter " + std::to_string(x) + " out of range");
}

std::string BraidWord::str() const {
    if (letters.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ' ';
        s += 's' + std::to_string(letters[i]);
    }
    return s;
}

BraidWord BraidWord::parse(int strands, const std::string& s) {
    std::vector<int> w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok == "e") continue;
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S')) throw InvalidArgument("bad braid letter '" + tok + "'");
        std::string body = tok.substr(1);
        int power = 1;
        if (auto c = body.find('^'); c != std::string::npos) {
            power = std::stoi(body.substr(c + 1));
            body = body.substr(0, c);
        }
        int g = std::stoi(body);
        for (int k = 0; k < power; ++k) w.push_back(g);
    }
    return BraidWord(strands, w);
}

BraidWord tripod_boundary(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidArgument("tripod legs must be >= 1");
    std::vector<int> w;
    for (int len : {a, b, c}) {
        w.push_back(2);
        w.insert(w.end(), len + 1, 1);
    }
    return BraidWord(3, w);
}

BraidWord linear_boundary(int n) {
    if (n < 1) throw InvalidArgument("linear family needs n >= 1");
    return BraidWord(2, std::vector<int>(n + 3, 1));
}

BraidWord brick_word(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidArgument("tripod legs must be >= 1");
    std::vector<int> w{1};
    w.insert(w.end(), a, 2);
    w.insert(w.end(), b - 1, 1);
    w.insert(w.end(), c, 2);
    return BraidWord(3, w);
}

}  // namespace weave
