#include "qm/dsl.hpp"

namespace qm {

// Keep this byte-identical with corpus/prelude.qmm; a test compares the two.
std::string_view prelude_text() {
    static const char text[] =
        R"(# Standard vocabulary: attribute definitions and usage goals, implicitly
# available to every model unless --no-prelude is given.

attribute EXISTENCE on facts "the element is present in the product at all"
attribute RELEVANCE on facts "the element matters for the usage situation it appears in"
attribute UNAMBIGUOUSNESS on facts "the element admits only one interpretation"
attribute SIMPLICITY on facts "the element is free of needless complication"
attribute STANDARD_CONFORMITY on facts "the element follows the applicable external standards"
attribute EXPECTATION_CONFORMITY on facts "the element behaves the way users expect it to"
attribute INTERNAL_CONSISTENCY on facts "the element is uniform with the rest of the product"
attribute EXTERNAL_CONSISTENCY on facts "the element is uniform with comparable products"
attribute CONTROLLABILITY on facts "the user can steer the element's behaviour"
attribute CUSTOMIZABILITY on facts "the user can adjust the element to personal needs"
attribute GUARDEDNESS on facts "the element is protected against unintended operation"
attribute ADAPTABILITY on facts "the element adjusts itself to the usage context"

attribute FREQUENCY on activities "how often the activity occurs; consumed as the roll-up weight"
attribute DURATION on activities "time the activity takes"
attribute PHYSICAL_STRESS on activities "bodily effort the activity demands"
attribute COGNITIVE_LOAD on activities "mental effort the activity demands"
attribute PROBABILITY_OF_ERROR on activities "chance of performing the activity incorrectly"

goal EFFECTIVENESS = PROBABILITY_OF_ERROR "goals are reached completely and correctly"
goal EFFICIENCY = DURATION, PHYSICAL_STRESS, COGNITIVE_LOAD "goals are reached with acceptable expenditure of resources"
goal SATISFACTION "use of the product is acceptable and agreeable; no attribute basis is defined"
goal SAFETY "use of the product is free of unacceptable risk; no attribute basis is defined"
)";
    return std::string_view(text, sizeof(text) - 1);
}

}  // namespace qm
