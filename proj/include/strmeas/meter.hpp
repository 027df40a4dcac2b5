#pragma once
// Cooperative auxiliary-space metering and the asymmetric streaming tape.
//
// Algorithms report the working structures they hold (frontiers, DP rows,
// recursion bookkeeping) in machine words.  Read-only inputs and output
// buffers are not charged.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "strmeas/token.hpp"

namespace strmeas {

struct AccountingError : std::logic_error {
    using std::logic_error::logic_error;
};

class SpaceMeter {
public:
    void charge(std::int64_t words) {
        if (words < 0) throw AccountingError("negative charge");
        live_ += words;
        if (live_ > peak_) peak_ = live_;
    }
    void release(std::int64_t words) {
        if (words < 0) throw AccountingError("negative release");
        if (words > live_) throw AccountingError("release exceeds the live balance");
        live_ -= words;
    }
    std::int64_t live() const { return live_; }
    std::int64_t peak() const { return peak_; }

    // Recursion depth bookkeeping, surfaced in run statistics.
    void enter() {
        ++depth_;
        if (depth_ > max_depth_) max_depth_ = depth_;
    }
    void leave() { --depth_; }
    std::int64_t max_depth() const { return max_depth_; }

private:
    std::int64_t live_ = 0;
    std::int64_t peak_ = 0;
    std::int64_t depth_ = 0;
    std::int64_t max_depth_ = 0;
};

inline void meter_charge(SpaceMeter& m, std::int64_t words) { m.charge(words); }
inline void meter_release(SpaceMeter& m, std::int64_t words) { m.release(words); }
inline std::int64_t meter_peak(const SpaceMeter& m) { return m.peak(); }

// Charges a fixed number of words for the lifetime of a scope.
class ScopedCharge {
public:
    ScopedCharge(SpaceMeter& m, std::int64_t words) : m_(&m), words_(words) { m_->charge(words_); }
    ~ScopedCharge() { m_->release(words_); }
    ScopedCharge(const ScopedCharge&) = delete;
    ScopedCharge& operator=(const ScopedCharge&) = delete;

private:
    SpaceMeter* m_;
    std::int64_t words_;
};

// One recursion frame: constant bookkeeping words plus the depth counter.
class FrameGuard {
public:
    FrameGuard(SpaceMeter& m, std::int64_t words) : charge_(m, words), m_(&m) { m_->enter(); }
    ~FrameGuard() { m_->leave(); }
    FrameGuard(const FrameGuard&) = delete;
    FrameGuard& operator=(const FrameGuard&) = delete;

private:
    ScopedCharge charge_;
    SpaceMeter* m_;
};

// A vector whose capacity is charged to a meter, so frontiers and DP rows are
// accounted for exactly as they grow and shrink.
template <class T>
class MeteredVec {
public:
    explicit MeteredVec(SpaceMeter& m) : m_(&m) {}
    MeteredVec(SpaceMeter& m, std::size_t n, const T& v = T()) : m_(&m), v_(n, v) { sync(); }
    ~MeteredVec() { m_->release(charged_); }

    MeteredVec(const MeteredVec& o) : m_(o.m_), v_(o.v_) { sync(); }
    MeteredVec& operator=(const MeteredVec& o) {
        if (this != &o) {
            v_ = o.v_;
            sync();
        }
        return *this;
    }
    MeteredVec(MeteredVec&& o) noexcept : m_(o.m_), v_(std::move(o.v_)), charged_(o.charged_) {
        o.charged_ = 0;
    }
    MeteredVec& operator=(MeteredVec&& o) noexcept {
        if (this != &o) {
            // Both vectors charge the same meter: swap storage and balances.
            std::swap(v_, o.v_);
            std::swap(charged_, o.charged_);
        }
        return *this;
    }

    void push_back(const T& t) {
        v_.push_back(t);
        sync();
    }
    void resize(std::size_t n, const T& t = T()) {
        v_.resize(n, t);
        sync();
    }
    void assign(std::size_t n, const T& t) {
        v_.assign(n, t);
        sync();
    }
    void reserve(std::size_t n) {
        v_.reserve(n);
        sync();
    }
    void clear() { v_.clear(); }
    void pop_back() { v_.pop_back(); }
    template <class It>
    void assign(It first, It last) {
        v_.assign(first, last);
        sync();
    }
    void swap(MeteredVec& o) noexcept {
        std::swap(v_, o.v_);
        std::swap(charged_, o.charged_);
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    T& operator[](std::size_t i) { return v_[i]; }
    const T& operator[](std::size_t i) const { return v_[i]; }
    T& back() { return v_.back(); }
    const T& back() const { return v_.back(); }
    auto begin() { return v_.begin(); }
    auto end() { return v_.end(); }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<T>& raw() const { return v_; }
    std::vector<T>& raw() { return v_; }

    // Re-syncs the charge after direct manipulation through raw().
    void sync() {
        const auto want = static_cast<std::int64_t>((v_.capacity() * sizeof(T) + 7) / 8);
        if (want > charged_) {
            m_->charge(want - charged_);
        } else if (want < charged_) {
            m_->release(charged_ - want);
        }
        charged_ = want;
    }

private:
    SpaceMeter* m_;
    std::vector<T> v_;
    std::int64_t charged_ = 0;
};

// One-pass cursor over x plus random access to y, with pass and probe counts.
class StreamTape {
public:
    StreamTape(const TokenString& x, const TokenString& y) : x_(&x), y_(&y) {}

    std::optional<Token> next() {
        if (passes_ == 0) passes_ = 1;
        if (cursor_ > x_->size()) return std::nullopt;
        return x_->at(cursor_++);
    }
    void rewind() {
        cursor_ = 1;
        ++passes_;
    }
    Token probe_y(std::size_t i) {
        if (i < 1 || i > y_->size()) throw IndexError("y probe out of range");
        ++probes_;
        return y_->at(i);
    }

    // Lengths are part of the model: n is announced up front, y is random access.
    std::size_t x_size() const { return x_->size(); }
    std::size_t y_size() const { return y_->size(); }
    std::size_t cursor() const { return cursor_; }
    std::int64_t passes_started() const { return passes_; }
    std::int64_t y_probes() const { return probes_; }

private:
    const TokenString* x_;
    const TokenString* y_;
    std::size_t cursor_ = 1;
    std::int64_t passes_ = 0;
    std::int64_t probes_ = 0;
};

inline std::optional<Token> tape_next(StreamTape& t) { return t.next(); }
inline Token tape_probe_y(StreamTape& t, std::size_t i) { return t.probe_y(i); }

// Random-access view of y through the tape, so every read is counted.
class TapeY {
public:
    explicit TapeY(StreamTape& t) : t_(&t) {}
    std::size_t size() const { return t_->y_size(); }
    Token at(std::size_t i) const { return t_->probe_y(i); }

private:
    StreamTape* t_;
};

}  // namespace strmeas
