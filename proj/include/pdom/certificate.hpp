#pragma once

#include <pdom/graph.hpp>

#include <json.hpp>

#include <string_view>

namespace pdom
{
    enum class CertificateKind
    {
        Gamma,
        PartialDom,
        Packing
    };

    auto kind_name(CertificateKind kind) -> std::string_view;

    /**
     * Witness set together with the quantity it attains. value is |witness|;
     * coverage is |N[witness]| (n for a dominating set).
     */
    struct Certificate
    {
        CertificateKind kind = CertificateKind::Gamma;
        VertexSet witness;
        int value = 0;
        int coverage = 0;
    };

    /// {"kind", "value", "coverage", "witness": [indices]} in that order.
    auto to_json(const Certificate & certificate) -> nlohmann::ordered_json;

    /**
     * Recount the certificate on g: the size and coverage must be reproduced,
     * a Gamma witness must dominate and a Packing witness must be a packing.
     * Optimality is not rechecked.
     */
    auto self_check(const Graph & g, const Certificate & certificate) -> bool;
}
