#ifndef BST_UNIT_GROUP_MODM_HPP
#define BST_UNIT_GROUP_MODM_HPP

#include "bst/abelian_group.hpp"

#include <vector>

namespace bst {

/* (Z/m)^* in invariant-factor form, with full discrete-log tables.  Moduli
 * stay small (m <= a few hundred), so the tables are built by complete
 * enumeration from CRT generators (primitive roots at odd prime powers,
 * {-1, 5} at powers of 2). */
struct unit_group_modm {
    long m = 1;
    fab_group grp;
    std::vector<long> gen_residues; /* residue mod m of each abstract generator */
    std::vector<long> dlog_index;   /* residue -> element index in grp, -1 for non-units */

    bool is_unit(long a) const;
    gelt dlog(long a) const;       /* throws on non-units */
    long residue(const gelt& x) const;
    long order() const { return grp.order(); }
};

unit_group_modm make_unit_group(long m);

long powmod(long b, long e, long m);

} // namespace bst

#endif
