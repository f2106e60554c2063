#!/usr/bin/env python3
"""Freeze the bundled stemmer regression file (tests/data/snowball_pairs.txt).

The vocabulary below is a hand-curated sample of real English words
covering every rule family of the snowball English algorithm:
exceptional forms, plural/verbal inflection, adverbial -ly chains,
the -ation/-ization/-ator nominalizations, -ful/-ness/-ous/-ive
derivations, -able/-ible/-ance/-ence/-ment/-ism/-ity suffixes, short
words, consonant-y handling, and ordinary corpus vocabulary. Stems are
produced by manuscriptor.stemmer.stem, which is validated against the
independent golden pairs in tests/test_stemmer.py before this file is
regenerated.

Run from the repo root:  python3 tools/make_stemmer_pairs.py
"""

from pathlib import Path

from manuscriptor.stemmer import stem

FAMILIES = """
act acted acting action actions active actively activity activities activate activated activation actor actors
adapt adapted adapting adaptation adaptive adaptation adaptability
adjust adjusted adjusting adjustment adjustable
admire admired admiring admiration admirable admirably
agree agreed agreeing agreement agreements agreeable
allow allowed allowing allowance allowances
analyze analyzed analyzing analysis analytic analytical analytically
announce announced announcing announcement
apply applied applies applying application applications applicable applicant
argue argued arguing argument arguments argumentative
arrange arranged arranging arrangement
associate associated associating association associations associative
assume assumed assuming assumption assumptions
attend attended attending attendance attendant attention attentive attentively
author authors authored authoring authorize authorized authorization authority authorities authoritative
base based basing basis bases basic basically
begin beginning beginner begins began
believe believed believing believer belief beliefs believable
build building buildings builder built
calculate calculated calculating calculation calculations calculator
care cared caring careful carefully carefulness careless carelessly carelessness
cause caused causing causation causal causality
change changed changing changes changeable
characterize characterized characterizing characterization characteristic characteristics
cite cited citing citation citations
classify classified classifies classifying classification classifier
collect collected collecting collection collective collectively collector
combine combined combining combination combinations
communicate communicated communicating communication communicative communism communist community communities
compare compared comparing comparison comparative comparatively comparable
compute computed computing computation computational computer computers
conclude concluded concluding conclusion conclusions conclusive conclusively
condition conditions conditioned conditional conditionally
confide confided confiding confidence confident confidently confidential
conform conformed conforming conformity conformable conformably
connect connected connecting connection connections connective connectivity
consider considered considering consideration considerations considerable considerably considerate
consist consisted consisting consists consistency consistent consistently
console consoled consoling consolation consolations consolatory consolidate consolidated consolidating consolidation
conspire conspired conspiring conspiracy conspirator conspirators conspicuous conspicuously
construct constructed constructing construction constructive
continue continued continuing continuation continuous continuously continuity
contribute contributed contributing contribution contributions contributor
control controls controlled controlling controller controllable
create created creating creation creations creative creatively creativity creator
decide decided deciding decision decisions decisive decisively decisiveness
define defined defining definition definitions definitive definitely
demonstrate demonstrated demonstrating demonstration demonstrative
depend depended depending dependence dependent dependently dependency dependable
derive derived deriving derivation derivative
describe described describing description descriptions descriptive
design designed designing designer designation
detect detected detecting detection detective detector
determine determined determining determination
develop developed developing development developments developer developmental
differ differed differing difference differences different differently differential
digit digits digital digitally digitize digitized digitizer digitization
direct directed directing direction directions directly director directive
discover discovered discovering discovery discoveries
discuss discussed discussing discussion discussions
distribute distributed distributing distribution distributions distributive
divide divided dividing division divisions divisible
document documents documented documenting documentation
edit edited editing edition editor editors editorial
educate educated educating education educational educationally educator
effect effects effective effectively effectiveness
elect elected electing election elective electric electrical electrically electricity
embed embedded embedding embeddings
emerge emerged emerging emergence emergent emergency
employ employed employing employment employer employee
enable enabled enabling
engage engaged engaging engagement
enjoy enjoyed enjoying enjoyment enjoyable
equal equally equality equalize equalized equation equations equivalent
establish established establishing establishment
estimate estimated estimating estimation estimator
evaluate evaluated evaluating evaluation evaluations evaluator
examine examined examining examination
excite excited exciting excitement excitable
exclude excluded excluding exclusion exclusive exclusively
expect expected expecting expectation expectations
experiment experiments experimental experimentally experimented experimenting experimentation
explain explained explaining explanation explanations explanatory
explore explored exploring exploration exploratory explorer
express expressed expressing expression expressions expressive
extend extended extending extension extensive extensively
fail failed failing failure failures
filter filtered filtering filters filtration
final finally finalize finalized finality
follow followed following follower
form formed forming formation formal formally formality formalize formalization
found founded founding foundation foundational founder
general generally generality generalize generalized generalization generalizations generate generated generating generation generations generator generous generously generosity
govern governed governing government governance governor
happy happily happiness unhappiness
highlight highlighted highlighting highlights
hope hoped hoping hopeful hopefully hopefulness hopeless hopelessly hopelessness
identify identified identifying identification identity identities identifiable
imagine imagined imagining imagination imaginative imaginary
improve improved improving improvement improvements
include included including inclusion inclusive
indicate indicated indicating indication indicator indicative
infer inferred inferring inference inferences inferential
inform informed informing information informative informal informally
insert inserted inserting insertion
inspect inspected inspecting inspection inspector
install installed installing installation
integrate integrated integrating integration integrative
intend intended intending intention intentions intentional intentionally
interact interacted interacting interaction interactions interactive interactively
interest interested interesting interests
interpret interpreted interpreting interpretation interpretive
introduce introduced introducing introduction introductory
invent invented inventing invention inventive inventor
investigate investigated investigating investigation investigations investigator
invite invited inviting invitation
involve involved involving involvement
iterate iterated iterating iteration iterations iterative iteratively
judge judged judging judgment judgmental
justify justified justifying justification justifiable
know knowing knowledge knowledgeable known
lead leading leader leadership
learn learned learning learner
like liked liking likely likelihood likeness
limit limited limiting limitation limitations limitless
locate located locating location locations locator
manage managed managing management manager manageable
measure measured measuring measurement measurements measurable
mention mentioned mentioning mentions
mobile mobility mobilize mobilized mobilization
modify modified modifying modification modifications
motivate motivated motivating motivation motivational
move moved moving movement movements movable
nation national nationally nationality nationalities nationalism nationalize
note noted noting notation notable notably
observe observed observing observation observations observer observable
obtain obtained obtaining obtainable
occupy occupied occupying occupation occupational
operate operated operating operation operations operational operator operators
oppose opposed opposing opposition opposite
organize organized organizing organization organizations organizer organizational
paper papers
perform performed performing performance performances performer
permit permitted permitting permission permissive
possible possibly possibility possibilities
predict predicted predicting prediction predictions predictive predictable predication
prepare prepared preparing preparation preparatory
present presented presenting presentation presentations
produce produced producing production productive productively productivity producer
propose proposed proposing proposal proposition
protect protected protecting protection protective
prove proved proving proven provable
provide provided providing provider provision
publish published publishing publication publications publisher
qualify qualified qualifying qualification qualitative quality qualities
question questioned questioning questionable
radical radically radicalism
rank ranked ranking rankings
rational rationally rationality rationalize rationalization ration rations
read reading reader readers readable readability
real really reality realize realized realizing realization realistic
recognize recognized recognizing recognition recognizable
recommend recommended recommending recommendation recommendations
reduce reduced reducing reduction reductions
refer referred referring reference references referential
relate related relating relation relations relational relationship relative relatively relativity
rely relied relies relying reliance reliable reliably reliability
remove removed removing removal removable
replace replaced replacing replacement replaceable
report reported reporting reporter
represent represented representing representation representations representative
require required requiring requirement requirements
research researched researching researcher researchers
resolve resolved resolving resolution
respond responded responding response responses responsive responsibility responsible responsibly
result resulted resulting results resultant
reveal revealed revealing revelation
review reviewed reviewing reviewer reviews
revise revised revising revision revival revive revived
search searched searching searches searchable
select selected selecting selection selections selective selectively selector
sense sensed sensing sensation sensitive sensitively sensitivity sensible sensibly
separate separated separating separation separately
serve served serving service services server
sign signed signing signal signals signature significance significant significantly signify signified
similar similarly similarity similarities
simple simply simplify simplified simplification simplicity
solve solved solving solution solutions solvable solver
specify specified specifying specification specifications specific specifically
state stated stating statement statements
structure structured structuring structural structurally
study studied studies studying student students
succeed succeeded succeeding success successful successfully succession successive successor
suggest suggested suggesting suggestion suggestions suggestive
summarize summarized summarizing summary summaries summarization
support supported supporting supportive supporter
suppose supposed supposing supposition
train trained training trainer trainee
transform transformed transforming transformation transformations transformative
translate translated translating translation translations translator
treat treated treating treatment treatments treatable
understand understanding understandable understood
use used using useful usefully usefulness useless uselessly user users usable usage
validate validated validating validation validity valid validly
value valued valuing valuable valuation
vary varied varies varying variation variations variety variable variably variance variant
verify verified verifying verification verifiable
view viewed viewing viewer views
visualize visualized visualizing visualization visual visually
write writing writer writers written
"""

EXTRA_WORDS = """
skis skies dying lying tying idly gently ugly early only singly sky news howe
atlas cosmos bias andes inning outing canning herring earring proceed exceed
ties cries gas this gaps kiwis caresses ponies abyss feed bled sing fly flying
cry by say enjoy hopped hopping fixedly luxuriated luxuriate hesitancy
vietnamization vilely analogously homologous bowdlerize gyroscopic airliner
irritant adoption adopted matrices indices queries query vertices appendices
hypotheses hypothesis theses thesis crises crisis analyses diagnosis diagnoses
lung lungs cancer cancers kidney kidneys organ organs patient patients disease
diseases clinical clinically medical medically therapy therapies therapeutic
cell cells tissue tissues tumor tumors gene genes genetic genetics protein
proteins molecule molecules molecular neuron neurons brain cortex synapse
synapses receptor receptors enzyme enzymes antibody antibodies immune immunity
infection infections viral virus viruses bacteria bacterial chronic acute
dose doses dosage symptom symptoms syndrome surgical surgery oncology
cardiology neurology radiology pathology epidemiology biopsy vaccine vaccines
vaccination metabolism metabolic inflammation inflammatory cholesterol
diabetes insulin glucose plasma serum lymph nodes artery arteries vein veins
pulmonary hepatic renal cardiac vascular cerebral spinal skeletal muscular
abdominal thoracic pediatric geriatric psychiatric cognitive behavioral
corpus corpora sentence sentences paragraph paragraphs abstract abstracts
manuscript manuscripts journal journals article articles citation bibliography
bibliographies keyword keywords vocabulary vocabularies dictionary dictionaries
index indexes indexed indexing token tokens tokenize tokenized tokenization
stem stems stemmed stemming stemmer vector vectors matrix embedded retrieval
retrieve retrieved retrieving relevance relevant ranking cosine distance
distances neighbor neighbors nearest boolean lexical semantic semantics
syntactic syntax grammar grammatical linguistic linguistics language languages
text texts textual word words phrase phrases segment segments segmentation
cluster clusters clustering classifier algorithm algorithms heuristic
heuristics iterate parameter parameters dimension dimensions dimensional
frequency frequencies probability probabilities statistic statistics
statistical statistically stochastic deterministic random randomly randomness
sample samples sampled sampling population populations distribution
correlation correlations regression inference experiment hypothesize
empirical empirically theoretical theoretically numerical numerically
approximate approximately approximation optimization optimize optimized
optimizing optimal optimally minimum maximum minimize maximized threshold
thresholds baseline baselines benchmark benchmarks metric metrics precision
recall accuracy accurate accurately robust robustness scalable scalability
efficient efficiently efficiency effectiveness latency throughput memory
storage database databases server servers client clients request requests
response protocol protocols interface interfaces implementation implement
implemented implementing module modules component components architecture
software hardware network networks machine machines learning artificial
intelligence neural layer layers weight weights gradient gradients descent
backpropagation convergence converge converged converging divergence
"""


def vocabulary() -> list[str]:
    words: list[str] = []
    seen: set[str] = set()
    for chunk in (FAMILIES, EXTRA_WORDS):
        for word in chunk.split():
            word = word.strip().lower()
            if word and word.isascii() and word.isalpha() and word not in seen:
                seen.add(word)
                words.append(word)
    return words


def main() -> None:
    words = vocabulary()
    if len(words) < 1000:
        raise SystemExit(f"vocabulary too small: {len(words)} words")
    words = words[:1000]
    out = Path(__file__).resolve().parent.parent / "tests" / "data" / "snowball_pairs.txt"
    lines = ["# snowball English regression pairs: word<TAB>stem, 1000 entries"]
    lines += [f"{w}\t{stem(w)}" for w in words]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} pairs to {out}")


if __name__ == "__main__":
    main()
