#ifndef BST_SERIALIZE_HPP
#define BST_SERIALIZE_HPP

#include "bst/qexp.hpp"
#include "bst/verify.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bst {

using ordered_json = nlohmann::ordered_json;

/* Integers are decimal strings; rationals are "num/den" in lowest terms. */
std::string z_str(const mpz_class& z);
std::string q_str(const mpq_class& q);
std::string cyc_str(const cyc& x); /* "num/den" when rational, polynomial otherwise */

ordered_json report_json(const verification_report& r);

/* Golden-oracle encodings, canonical given the inputs. */
ordered_json classgroup_json(long D);
ordered_json rayclass_json(long D, const std::vector<long>& T);
ordered_json theta_json(long D, const std::vector<long>& S_extra, const std::vector<long>& T);
ordered_json qexp_json(const qexpansion& f, long N);
ordered_json ks_json(long D, const std::vector<long>& T);

/* Single fixed rendering for every emitted file. */
std::string canonical_dump(const ordered_json& j);

} // namespace bst

#endif
