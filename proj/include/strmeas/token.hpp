#pragma once
// Tokens, token strings, intervals and the sequence abstraction shared by
// every algorithm in the library.
//
// Indices on the public surface are 1-based and inclusive.  A sequence is any
// type with size() and a 1-based at(i); materialized strings, substring views
// and the virtual sequences built by the algorithms all model it.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strmeas {

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A totally ordered alphabet symbol.  The whole order is packed into one
// signed 64-bit word: the two extreme values are the -inf / +inf sentinels and
// the value just above -inf is reserved as the wildcard used by masked views,
// so it compares below every real symbol and equals none of them.
class Token {
public:
    enum class Kind : std::uint8_t { NegInf, Symbol, PosInf };

    static constexpr std::int64_t kMinCode = std::numeric_limits<std::int64_t>::min() + 2;
    static constexpr std::int64_t kMaxCode = std::numeric_limits<std::int64_t>::max() - 1;

    constexpr Token() = default;

    static Token symbol(std::int64_t code) {
        if (code < kMinCode || code > kMaxCode) {
            throw std::invalid_argument("token code outside the symbol range");
        }
        return Token(code);
    }
    static constexpr Token neg_inf() { return Token(std::numeric_limits<std::int64_t>::min()); }
    static constexpr Token pos_inf() { return Token(std::numeric_limits<std::int64_t>::max()); }
    static constexpr Token wildcard() { return Token(std::numeric_limits<std::int64_t>::min() + 1); }
    static constexpr Token from_byte(unsigned char c) { return Token(static_cast<std::int64_t>(c)); }

    constexpr std::int64_t code() const { return v_; }
    constexpr Kind kind() const {
        if (v_ == std::numeric_limits<std::int64_t>::min()) return Kind::NegInf;
        if (v_ == std::numeric_limits<std::int64_t>::max()) return Kind::PosInf;
        return Kind::Symbol;
    }
    constexpr bool is_finite() const { return kind() == Kind::Symbol; }

    constexpr auto operator<=>(const Token&) const = default;

private:
    constexpr explicit Token(std::int64_t v) : v_(v) {}
    std::int64_t v_ = 0;
};

struct Interval {
    std::int64_t start = 1;
    std::int64_t end = 0;

    constexpr std::int64_t length() const { return end - start + 1; }
    constexpr bool empty() const { return end < start; }
    constexpr bool valid() const { return start >= 1 && end >= start - 1; }
    constexpr auto operator<=>(const Interval&) const = default;
};

template <class S>
concept TokenSequence = requires(const S& s, std::size_t i) {
    { s.size() } -> std::convertible_to<std::size_t>;
    { s.at(i) } -> std::convertible_to<Token>;
};

// Materialized token string.
class TokenString {
public:
    TokenString() = default;
    explicit TokenString(std::vector<Token> toks) : toks_(std::move(toks)) {}

    static TokenString from_bytes(std::string_view bytes) {
        std::vector<Token> t;
        t.reserve(bytes.size());
        for (unsigned char c : bytes) t.push_back(Token::from_byte(c));
        return TokenString(std::move(t));
    }
    static TokenString from_ints(const std::vector<std::int64_t>& codes) {
        std::vector<Token> t;
        t.reserve(codes.size());
        for (auto c : codes) t.push_back(Token::symbol(c));
        return TokenString(std::move(t));
    }
    template <TokenSequence S>
    static TokenString copy_of(const S& s) {
        std::vector<Token> t;
        t.reserve(s.size());
        for (std::size_t i = 1; i <= s.size(); ++i) t.push_back(s.at(i));
        return TokenString(std::move(t));
    }

    std::size_t size() const { return toks_.size(); }
    bool empty() const { return toks_.empty(); }
    Token at(std::size_t i) const {
        if (i < 1 || i > toks_.size()) throw IndexError("token index out of range");
        return toks_[i - 1];
    }
    const std::vector<Token>& tokens() const { return toks_; }
    void push_back(Token t) { toks_.push_back(t); }

    // Renders symbol codes as bytes; only meaningful for byte alphabets.
    std::string to_bytes() const {
        std::string s;
        s.reserve(toks_.size());
        for (auto t : toks_) s.push_back(static_cast<char>(t.code()));
        return s;
    }
    std::vector<std::int64_t> codes() const {
        std::vector<std::int64_t> c;
        c.reserve(toks_.size());
        for (auto t : toks_) c.push_back(t.code());
        return c;
    }

    bool operator==(const TokenString&) const = default;

private:
    std::vector<Token> toks_;
};

// Non-owning substring view over any sequence.  Taking a view of a view
// composes the offsets instead of nesting types.
template <TokenSequence S>
class SubView {
public:
    SubView(const S& base, std::size_t offset, std::size_t len)
        : base_(&base), off_(offset), len_(len) {}

    std::size_t size() const { return len_; }
    Token at(std::size_t i) const {
        if (i < 1 || i > len_) throw IndexError("view index out of range");
        return base_->at(off_ + i);
    }
    const S& base() const { return *base_; }
    std::size_t offset() const { return off_; }

private:
    const S* base_;
    std::size_t off_;
    std::size_t len_;
};

template <TokenSequence S>
SubView<S> token_substring(const S& s, Interval iv) {
    if (!iv.valid() || static_cast<std::size_t>(iv.end) > s.size() ||
        (iv.empty() && static_cast<std::size_t>(iv.start) > s.size() + 1)) {
        throw IndexError("substring interval out of range");
    }
    return SubView<S>(s, static_cast<std::size_t>(iv.start - 1), static_cast<std::size_t>(iv.length()));
}

template <TokenSequence S>
SubView<S> token_substring(const SubView<S>& v, Interval iv) {
    if (!iv.valid() || static_cast<std::size_t>(iv.end) > v.size() ||
        (iv.empty() && static_cast<std::size_t>(iv.start) > v.size() + 1)) {
        throw IndexError("substring interval out of range");
    }
    return SubView<S>(v.base(), v.offset() + static_cast<std::size_t>(iv.start - 1),
                      static_cast<std::size_t>(iv.length()));
}

}  // namespace strmeas
