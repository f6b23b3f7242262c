#include "vigil/payload.hpp"

#include <stdexcept>

#include "vigil/wire.hpp"

namespace vigil {

namespace {
constexpr uint32_t kMaxElems = 1u << 24;
}

const char* payload_kind_name(PayloadKind k) {
    switch (k) {
        case PayloadKind::CiphertextVector: return "CiphertextVector";
        case PayloadKind::PlainFloatVector: return "PlainFloatVector";
        case PayloadKind::PlainScalar: return "PlainScalar";
        case PayloadKind::BoolFlag: return "BoolFlag";
        case PayloadKind::IdHashList: return "IdHashList";
        case PayloadKind::OpaqueForbidden: return "OpaqueForbidden";
    }
    return "?";
}

bool payload_kind_from_name(const std::string& name, PayloadKind& out) {
    for (PayloadKind k : {PayloadKind::CiphertextVector, PayloadKind::PlainFloatVector,
                          PayloadKind::PlainScalar, PayloadKind::BoolFlag,
                          PayloadKind::IdHashList, PayloadKind::OpaqueForbidden}) {
        if (name == payload_kind_name(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

Payload Payload::ciphertext_vector(std::string key_id, int scale_bits,
                                   std::vector<Bigint> values) {
    Payload p;
    p.kind = PayloadKind::CiphertextVector;
    p.key_id = std::move(key_id);
    p.scale_bits = scale_bits;
    p.ints = std::move(values);
    return p;
}

Payload Payload::plain_vector(int scale_bits, std::vector<Bigint> mantissas) {
    Payload p;
    p.kind = PayloadKind::PlainFloatVector;
    p.scale_bits = scale_bits;
    p.ints = std::move(mantissas);
    return p;
}

Payload Payload::plain_scalar(int scale_bits, Bigint mantissa) {
    Payload p;
    p.kind = PayloadKind::PlainScalar;
    p.scale_bits = scale_bits;
    p.ints.push_back(std::move(mantissa));
    return p;
}

Payload Payload::bool_flag(bool v) {
    Payload p;
    p.kind = PayloadKind::BoolFlag;
    p.flag = v;
    return p;
}

Payload Payload::id_hash_list(uint16_t elem_width, std::vector<Bytes> elems) {
    Payload p;
    p.kind = PayloadKind::IdHashList;
    p.elem_width = elem_width;
    p.blobs = std::move(elems);
    return p;
}

Payload Payload::opaque(uint8_t tag, Bytes body) {
    Payload p;
    p.kind = PayloadKind::OpaqueForbidden;
    p.raw_tag = tag;
    p.raw = std::move(body);
    return p;
}

size_t Payload::length() const {
    switch (kind) {
        case PayloadKind::CiphertextVector:
        case PayloadKind::PlainFloatVector: return ints.size();
        case PayloadKind::PlainScalar:
        case PayloadKind::BoolFlag: return 1;
        case PayloadKind::IdHashList: return blobs.size();
        case PayloadKind::OpaqueForbidden: return raw.size();
    }
    return 0;
}

Bytes Payload::encode() const {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(kind));
    switch (kind) {
        case PayloadKind::CiphertextVector:
            w.str(key_id);
            w.u16(static_cast<uint16_t>(scale_bits));
            w.u32(static_cast<uint32_t>(ints.size()));
            for (const auto& v : ints) {
                Bytes b = bigint_to_bytes(v);
                w.bytes(as_span(b));
            }
            break;
        case PayloadKind::PlainFloatVector:
            w.u16(static_cast<uint16_t>(scale_bits));
            w.u32(static_cast<uint32_t>(ints.size()));
            for (const auto& v : ints) write_bigint(w, v);
            break;
        case PayloadKind::PlainScalar:
            w.u16(static_cast<uint16_t>(scale_bits));
            write_bigint(w, ints.at(0));
            break;
        case PayloadKind::BoolFlag:
            w.u8(flag ? 1 : 0);
            break;
        case PayloadKind::IdHashList:
            w.u16(elem_width);
            w.u32(static_cast<uint32_t>(blobs.size()));
            for (const auto& b : blobs) {
                if (b.size() != elem_width) throw WireError("id hash width mismatch");
                w.raw(as_span(b));
            }
            break;
        case PayloadKind::OpaqueForbidden:
            // Re-encoding keeps the original tag so hashes are stable.
            {
                ByteWriter raw_w;
                raw_w.u8(raw_tag);
                raw_w.raw(as_span(raw));
                return raw_w.take();
            }
    }
    return w.take();
}

Payload Payload::parse(std::span<const uint8_t> body) {
    ByteReader r(body);
    uint8_t tag = r.u8();
    Payload p;
    switch (static_cast<PayloadKind>(tag)) {
        case PayloadKind::CiphertextVector: {
            p.kind = PayloadKind::CiphertextVector;
            p.key_id = r.str();
            p.scale_bits = r.u16();
            uint32_t n = r.u32();
            if (n > kMaxElems) throw WireError("element count too large");
            p.ints.reserve(n);
            for (uint32_t i = 0; i < n; i++) {
                Bytes b = r.bytes();
                p.ints.push_back(bigint_from_bytes(as_span(b)));
            }
            break;
        }
        case PayloadKind::PlainFloatVector: {
            p.kind = PayloadKind::PlainFloatVector;
            p.scale_bits = r.u16();
            uint32_t n = r.u32();
            if (n > kMaxElems) throw WireError("element count too large");
            p.ints.reserve(n);
            for (uint32_t i = 0; i < n; i++) p.ints.push_back(read_bigint(r));
            break;
        }
        case PayloadKind::PlainScalar:
            p.kind = PayloadKind::PlainScalar;
            p.scale_bits = r.u16();
            p.ints.push_back(read_bigint(r));
            break;
        case PayloadKind::BoolFlag: {
            p.kind = PayloadKind::BoolFlag;
            uint8_t v = r.u8();
            if (v > 1) throw WireError("flag must be 0 or 1");
            p.flag = v == 1;
            break;
        }
        case PayloadKind::IdHashList: {
            p.kind = PayloadKind::IdHashList;
            p.elem_width = r.u16();
            uint32_t n = r.u32();
            if (p.elem_width == 0 && n > 0) throw WireError("zero-width elements");
            if (n > kMaxElems) throw WireError("element count too large");
            p.blobs.reserve(n);
            for (uint32_t i = 0; i < n; i++) p.blobs.push_back(r.raw(p.elem_width));
            break;
        }
        default:
            // Unknown tag: never interpreted, flagged for the rule checker.
            p.kind = PayloadKind::OpaqueForbidden;
            p.raw_tag = tag;
            p.raw = r.raw(r.remaining());
            return p;
    }
    r.expect_end();
    return p;
}

bool Payload::operator==(const Payload& other) const {
    return encode() == other.encode();
}

}  // namespace vigil
