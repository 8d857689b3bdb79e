#include "qtoric/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace qtoric {

void FieldSpec::validate() const {
    if (d == 0) return;
    if (d < 2) throw SpecParseError("field: d must be >= 2, got " + std::to_string(d));
    for (long long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0)
            throw SpecParseError("field: d must be squarefree, got " + std::to_string(d) +
                                 " (divisible by " + std::to_string(p * p) + ")");
    }
}

std::string FieldSpec::str() const {
    return isRational() ? "Q" : "Q(sqrt " + std::to_string(d) + ")";
}

Scalar::Scalar(const Rat& a, const Rat& b, const FieldSpec& field) : a_(a), b_(b), d_(field.d) {
    if (field.isRational() && b_ != 0)
        throw InternalError("scalar: sqrt part requires a quadratic field");
    normalizeTag();
}

long long Scalar::joinFields(const Scalar& x, const Scalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw InternalError("scalar: mixed quadratic fields sqrt(" + std::to_string(x.d_) +
                        ") vs sqrt(" + std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b| sqrt(d) decides, i.e. a^2 vs b^2 d.
    const Rat lhs = a_ * a_;
    const Rat rhs = b_ * b_ * d_;
    if (lhs == rhs)
        throw InternalError("scalar: a^2 == b^2 d with b != 0; field tag is not squarefree");
    return lhs > rhs ? sa : sb;
}

// Floor of a nonnegative rational, truncation suffices.
static Int floorNonneg(const Rat& r) { return Int(numerator(r) / denominator(r)); }

static Int floorRat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

Int Scalar::floorInt() const {
    if (b_ == 0) return floorRat(a_);
    // b sqrt(d) = sign(b) * sqrt(b^2 d); integer sqrt of the floor brackets
    // the true value within 2, then exact comparisons settle it.
    const Rat r = b_ * b_ * d_;
    const Int root = sqrt(floorNonneg(r));
    Int cand = floorRat(a_) + (b_ > 0 ? root : -(root + 2));
    int guard = 0;
    while (*this < Scalar(cand)) {
        --cand;
        if (++guard > 8) throw InternalError("scalar: floor bracketing failed");
    }
    while (*this >= Scalar(Int(cand + 1))) {
        ++cand;
        if (++guard > 8) throw InternalError("scalar: floor bracketing failed");
    }
    return cand;
}

Scalar Scalar::mod1() const { return *this - Scalar(floorInt()); }

double Scalar::approx() const {
    double v = a_.convert_to<double>();
    if (b_ != 0) v += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
    return v;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = joinFields(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalizeTag();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = joinFields(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalizeTag();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const long long d = joinFields(*this, o);
    const Rat a = a_ * o.a_ + b_ * o.b_ * d;
    const Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalizeTag();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.isZero()) throw InternalError("scalar: division by zero");
    const long long d = joinFields(*this, o);
    // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
    const Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
    if (norm == 0) throw InternalError("scalar: zero field norm; field tag is not squarefree");
    const Rat a = (a_ * o.a_ - b_ * o.b_ * d) / norm;
    const Rat b = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = a;
    b_ = b;
    d_ = d;
    normalizeTag();
    return *this;
}

static std::string fmtRat(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string Scalar::str() const {
    if (b_ == 0) return fmtRat(a_);
    std::string s = fmtRat(a_);
    s += (b_ < 0 ? '-' : '+');
    s += fmtRat(b_ < 0 ? Rat(-b_) : b_);
    s += 's';
    return s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

namespace {

struct ScalarParser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SpecParseError("scalar \"" + text + "\": " + what + " at position " +
                             std::to_string(pos));
    }

    bool atEnd() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    std::string digits() {
        size_t start = pos;
        while (!atEnd() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return text.substr(start, pos - start);
    }

    // term := ["-"] digits ["/" nonzero-digits]
    Rat term() {
        bool neg = false;
        if (!atEnd() && peek() == '-') {
            neg = true;
            ++pos;
        }
        Int num(digits());
        Int den = 1;
        if (!atEnd() && peek() == '/') {
            ++pos;
            den = Int(digits());
            if (den == 0) fail("zero denominator");
        }
        Rat r(num, den);
        return neg ? Rat(-r) : r;
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text, const FieldSpec& field) {
    ScalarParser p{text};
    const Rat a = p.term();
    if (p.atEnd()) return Scalar(a);
    if (p.peek() != '+' && p.peek() != '-') p.fail("expected '+', '-' or end of scalar");
    const bool minus = p.peek() == '-';
    ++p.pos;
    Rat b = p.term();
    if (p.atEnd() || p.peek() != 's') p.fail("expected 's'");
    ++p.pos;
    if (!p.atEnd()) p.fail("trailing characters");
    if (minus) b = -b;
    if (field.isRational())
        throw SpecParseError("scalar \"" + text + "\": sqrt term used with rational field");
    return Scalar(a, b, field);
}

} // namespace qtoric
