#pragma once

#include <string>
#include <vector>

#include "vigil/bigint.hpp"
#include "vigil/bytes.hpp"

namespace vigil {

/// Whitelisted payload body layouts. Anything outside this set deserializes
/// to OpaqueForbidden: the bytes are kept for forensics but nothing is ever
/// interpreted, let alone executed.
enum class PayloadKind : uint8_t {
    CiphertextVector = 0x01,
    PlainFloatVector = 0x02,
    PlainScalar = 0x03,
    BoolFlag = 0x04,
    IdHashList = 0x05,
    OpaqueForbidden = 0xff,
};

const char* payload_kind_name(PayloadKind k);
bool payload_kind_from_name(const std::string& name, PayloadKind& out);

struct Payload {
    PayloadKind kind = PayloadKind::BoolFlag;

    // CiphertextVector / PlainFloatVector / PlainScalar
    std::string key_id;            // CiphertextVector only
    int scale_bits = 0;
    std::vector<Bigint> ints;      // ciphertext values or signed mantissas

    bool flag = false;             // BoolFlag

    uint16_t elem_width = 0;       // IdHashList
    std::vector<Bytes> blobs;

    uint8_t raw_tag = 0;           // OpaqueForbidden
    Bytes raw;

    static Payload ciphertext_vector(std::string key_id, int scale_bits,
                                     std::vector<Bigint> values);
    static Payload plain_vector(int scale_bits, std::vector<Bigint> mantissas);
    static Payload plain_scalar(int scale_bits, Bigint mantissa);
    static Payload bool_flag(bool v);
    static Payload id_hash_list(uint16_t elem_width, std::vector<Bytes> elems);
    static Payload opaque(uint8_t tag, Bytes body);

    /// Element count as seen by rule-table length checks.
    size_t length() const;

    Bytes encode() const;
    /// Strict parse: throws WireError on a malformed whitelisted body;
    /// returns an OpaqueForbidden payload for unknown tags.
    static Payload parse(std::span<const uint8_t> body);

    bool operator==(const Payload& other) const;
};

}  // namespace vigil
