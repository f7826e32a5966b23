#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lrc {

enum class FieldKind { Prime, Binary };

/// A base finite field: either a prime field of order p or a binary field
/// GF(2^s) for s in {4, 8, 16} with a fixed reduction polynomial
/// (s=4: x^4+x+1, s=8: x^8+x^4+x^3+x+1, s=16: x^16+x^12+x^3+x+1).
/// Elements are plain uint32_t values below order(). Binary fields carry
/// shared log/exp tables built at construction; all instances are immutable
/// values and safe to share across threads.
class BaseField {
  public:
    static BaseField prime(uint32_t p);
    static BaseField gf2(unsigned s);

    /// Parses the descriptor text form: "prime:<p>" or "gf2:<s>".
    static BaseField parse(const std::string &descriptor);
    std::string descriptor() const;

    FieldKind kind() const { return kind_; }
    uint32_t order() const { return order_; }
    /// Characteristic: p for prime fields, 2 for binary fields.
    uint32_t characteristic() const { return kind_ == FieldKind::Prime ? order_ : 2; }
    /// Reduction polynomial bitmask (binary kind only; top bit set).
    uint32_t reduction_poly() const { return red_poly_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const; // throws ZeroInverse on a == 0
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Canonical element enumeration: element(i) == i for 0 <= i < order.
    /// (Ascending integers for prime fields, ascending bit patterns for
    /// binary fields.)
    uint32_t element(uint32_t index) const;

    void check_element(uint32_t a) const; // throws FieldMismatch when out of range

    bool operator==(const BaseField &rhs) const;
    bool operator!=(const BaseField &rhs) const { return !(*this == rhs); }

  private:
    struct BinTables {
        std::vector<uint32_t> log;
        std::vector<uint32_t> exp; // doubled length, avoids a mod in mul
    };

    BaseField(FieldKind kind, uint32_t order, uint32_t red_poly);

    static uint32_t clmul_reduce(uint32_t a, uint32_t b, uint32_t poly, unsigned s);
    void build_tables(unsigned s);

    FieldKind kind_;
    uint32_t order_;
    uint32_t red_poly_ = 0;
    std::shared_ptr<const BinTables> tab_;
};

} // namespace lrc
