#include <pdom/certificate.hpp>
#include <pdom/coverage.hpp>

namespace pdom
{
    auto kind_name(CertificateKind kind) -> std::string_view
    {
        switch (kind) {
        case CertificateKind::Gamma:
            return "Gamma";
        case CertificateKind::PartialDom:
            return "PartialDom";
        case CertificateKind::Packing:
            return "Packing";
        }
        return "unknown";
    }

    auto to_json(const Certificate & certificate) -> nlohmann::ordered_json
    {
        nlohmann::ordered_json result;
        result["kind"] = kind_name(certificate.kind);
        result["value"] = certificate.value;
        result["coverage"] = certificate.coverage;
        result["witness"] = certificate.witness.members();
        return result;
    }

    auto self_check(const Graph & g, const Certificate & certificate) -> bool
    {
        if (certificate.witness.width() != g.order())
            return false;
        auto view = cover(g, certificate.witness);
        if (certificate.witness.count() != certificate.value || view.dom_count != certificate.coverage)
            return false;
        switch (certificate.kind) {
        case CertificateKind::Gamma:
            return view.dom_count == g.order();
        case CertificateKind::PartialDom:
            return true;
        case CertificateKind::Packing:
            return is_packing(g, certificate.witness);
        }
        return false;
    }
}
