#include "sigmatau/reference.hpp"

namespace sigmatau {

const std::vector<ReferenceEntry>& reference_table(Family f)
{
    static const std::vector<ReferenceEntry> g2{
        {"KdV4", 4, "p1111 = 6*p11^2 + a4*p11 + 4*p12 + 1/2*a3", ""},
        {"KdV6", 6, "p1112 = 6*p12*p11 - 2*p22 + a4*p12", ""},
        {"Jac6", 6, "p111^2 = 4*p11^3 + a3*p11 + a4*p11^2 + 4*p12*p11 + a2 + 4*p22", ""},
        {"QL7", 7, "p12*p111 - p122 - p112*p11 = 0", ""},
        {"KdV8", 8, "p1122 = 2*p11*p22 + 4*p12^2 + 1/2*a3*p12", ""},
        {"Jac8(mixed)", 8, "p111*p112 = 4*p11^2*p12 + a4*p11*p12 + 2*p12^2 - 2*p11*p22 + 1/2*a3*p12 + 1/2*a1",
         "derived; needed for the Kummer identity"},
        {"Jac8", 10, "p112^2 = a0 - 4*p22*p12 + a4*p12^2 + 4*p11*p12^2",
         "printed at weight 8; both sides have weight 10", true},
        {"QL9", 9, "8*p122*p11 - 4*p12*p112 - 4*p222 + 2*a4*p122 - a3*p112 - 4*p111*p22 = 0", ""},
        {"KdV10", 10, "p1222 = 6*p12*p22 + a2*p12 - 1/2*a1*p11 - a0", ""},
        {"Jac10(1)", 10,
         "p111*p122 = -1/2*a1*p11 + 2*p22*p11^2 + 2*p11*p12^2 + a2*p12 + 4*p22*p12 + 1/2*a3*p12*p11", ""},
        {"Jac10(2)", 10, "p112^2 = a0 - 4*p22*p12 + a4*p12^2 + 4*p11*p12^2", ""},
    };
    static const std::vector<ReferenceEntry> tri{
        {"T4", 4, "p1111 = 6*p11^2 - 3*p22", ""},
        {"T5", 5, "p1112 = 6*p11*p12 + 3*mu3*p11", ""},
        {"T6(1)", 6, "p111^2 = 4*p11^3 + p12^2 + 4*p13 - 4*p11*p22", ""},
        {"T6(2)", 6, "p1122 = 4*p13 + 2*mu6 + 4*p12^2 + 2*p11*p22 + 3*mu3*p12", ""},
    };
    return f == Family::HyperellipticG2 ? g2 : tri;
}

int reference_complete_through(Family f)
{
    return f == Family::HyperellipticG2 ? 10 : 5;
}

const std::string& trigonal_quartic_text()
{
    static const std::string q =
        "p12^4 - p22^3 - 2*p11*p33 + 2*p13^2 + 4*p12^2*p13 + p1113*p22 - 6*p11*p13*p22 + 4*p11*p12*p23 + "
        "p11^2*p22^2 - 2*p11*p12^2*p22 - 4/3*p1113*p11^2 + 8*p11^3*p13 + 2*mu12 + 4*mu6*p11^3 - 4*mu6*p11*p22 + "
        "3*mu3*p12*p13 + 3*mu3*p11*p23 + mu3*p12^3 + 2*mu6*p13 + mu6*p12^2 + mu9*p12 - mu3^2*p11^3 - "
        "3*mu3*p11*p12*p22 = 0";
    return q;
}

} // namespace sigmatau
