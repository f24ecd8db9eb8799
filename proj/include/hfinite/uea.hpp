#pragma once

#include "hfinite/liealg.hpp"

#include <map>

namespace hfinite::liealg {

using Word = std::vector<Label>;

// A finite linear combination of words in the Chevalley basis. In a word the
// rightmost letter acts first.
class UEAWord {
public:
    UEAWord() = default;
    static UEAWord letter(Label l);
    static UEAWord word(Word w, const Rat& c = Rat(1));
    static UEAWord scalar(const Rat& c);

    const std::map<Word, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t max_length() const;

    UEAWord operator+(const UEAWord& o) const;
    UEAWord operator-(const UEAWord& o) const;
    UEAWord operator*(const UEAWord& o) const;  // concatenation
    UEAWord operator*(const Rat& c) const;
    bool operator==(const UEAWord& o) const { return terms_ == o.terms_; }
    void add(const Word& w, const Rat& c);

    // Weight of a homogeneous combination; throws when terms disagree.
    Weight weight(const LieAlgebra& g) const;
    std::string to_string(const LieAlgebra& g) const;

private:
    std::map<Word, Rat> terms_;
};

// Trace of the k-th power of the generator matrix sum_a X_a (x) X^a, where X^a
// is the trace-form dual basis. Central in the enveloping algebra.
UEAWord gelfand_invariant(const LieAlgebra& g, int k);

// The scalar by which a weight-zero element acts on the highest-weight
// vector of the Verma module of highest weight lambda.
Rat verma_hc_eigenvalue(const LieAlgebra& g, const UEAWord& z, const Weight& lambda);

// Applies an automorphism given by basis-coordinate images letter by letter.
UEAWord map_letters(const UEAWord& u, const std::vector<std::vector<Rat>>& images);

}  // namespace hfinite::liealg
