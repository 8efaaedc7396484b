"""Hand-authored fixture corpus: problems plus stored model outputs.

Each entry holds the problem, one translation per language and the
selection response. Translations deliberately vary in quality: most match
the gold answer, some are wrong, some do not parse. ``build_fixtures.py``
turns this module into the committed dataset and replay store.
"""

from __future__ import annotations

TF = ["A) True", "B) False"]
TFU = ["A) True", "B) False", "C) Unknown"]
Q_TF = "Is the following statement true or false? "
Q_TFU = "Based on the above information, is the following statement true, false, or unknown? "
Q_MC = "Which of the following is true?"


def select(kind: str, why: str) -> str:
    return f"{why}\nAnswer: {kind}"


TIGER = {
    "id": "tiger",
    "source": "ProofWriter",
    "context": [
        "The tiger is big.",
        "If something is big then it visits the rabbit.",
        "The rabbit visits the tiger.",
        "If something visits the rabbit then the rabbit needs the lion.",
        "If something sees the tiger then it is rough.",
    ],
    "question": Q_TFU + "The rabbit does not need the lion.",
    "options": TFU,
    "answer_index": 1,
    "FOL": """PREMISES:
Big(tiger)
forall x. (Big(x) -> Visits(x, rabbit))
Visits(rabbit, tiger)
forall x. (Visits(x, rabbit) -> Needs(rabbit, lion))
forall x. (Sees(x, tiger) -> Rough(x))
GOAL:
~Needs(rabbit, lion)
""",
    "LP": """big(tiger).
visits(rabbit, tiger).
visits(X, rabbit) :- big(X).
needs(rabbit, lion) :- visits(X, rabbit).
rough(X) :- sees(X, tiger).
?- ~needs(rabbit, lion).
""",
    "SAT": """objects: tiger, rabbit, lion
constraints:
big(tiger)
visits(tiger, rabbit)
options:
not needs(rabbit, lion)
""",
    "select": select("LP", "The context is a set of facts and if-then rules about"
                           " individuals, so chaining the rules forward answers it."),
}


PRONTOQA = [
    {
        "id": "pq01",
        "context": ["Every wumpus is a tumpus.", "Each tumpus is not red.", "Max is a wumpus."],
        "question": Q_TF + "Max is not red.",
        "answer_index": 0,
        "FOL": """PREMISES:
forall x. (Wumpus(x) -> Tumpus(x))
forall x. (Tumpus(x) -> ~Red(x))
Wumpus(max)
GOAL:
~Red(max)
""",
        "LP": """wumpus(max).
tumpus(X) :- wumpus(X).
~red(X) :- tumpus(X).
?- ~red(max).
""",
        "SAT": """objects: max
constraints:
wumpus(max)
options:
not red(max)
""",
        "select": select("FOL", "Category chains with universal statements suit first-order logic."),
    },
    {
        "id": "pq02",
        "context": ["Every yumpus is a dumpus.", "Dumpuses are not bright.",
                    "Every vumpus is bright.", "Sally is a yumpus."],
        "question": Q_TF + "Sally is a vumpus.",
        "answer_index": 1,
        "FOL": """PREMISES:
forall x. (Yumpus(x) -> Dumpus(x))
forall x. (Dumpus(x) -> ~Bright(x))
forall x. (Vumpus(x) -> Bright(x))
Yumpus(sally)
GOAL:
Vumpus(sally)
""",
        "LP": """yumpus(sally).
dumpus(X) :- yumpus(X).
~bright(X) :- dumpus(X).
bright(X) :- vumpus(X).
?- vumpus(sally).
""",
        "SAT": "This problem has no ordering, so it cannot be written as positions.\n",
        "select": select("FOL", "The statements are universally quantified class memberships."),
    },
    {
        "id": "pq03",
        "context": ["All jompuses are zumpuses.", "Each zumpus is a rompus.",
                    "Every rompus is sour.", "Alex is a jompus."],
        "question": Q_TF + "Alex is sour.",
        "answer_index": 0,
        "FOL": """PREMISES:
forall x. (Jompus(x) -> Zumpus(x))
forall x. (Zumpus(x) -> Rompus(x))
forall x. (Rompus(x) -> Sour(x))
Jompus(alex)
GOAL:
Sour(alex)
""",
        "LP": """jompus(alex).
zumpus(X) :- jompus(X).
rompus(X) :- zumpus(X).
sour(X) :- rompus(X).
?- sour(alex).
""",
        "SAT": """objects: alex
constraints:
pos(alex) = 1
options:
pos(alex) = 1
""",
        "select": select("FOL", "A syllogism chain: FOL."),
    },
    {
        "id": "pq04",
        "context": ["Each impus is a lempus.", "Every lempus is not transparent.",
                    "Every numpus is transparent.", "Wren is an impus."],
        "question": Q_TF + "Wren is transparent.",
        "answer_index": 1,
        "FOL": """PREMISES:
forall x. (Impus(x) -> Lempus(x))
forall x. (Lempus(x) -> ~Transparent(x))
forall x. (Numpus(x) -> Transparent(x))
Impus(wren)
GOAL:
Transparent(wren)
""",
        "LP": """impus(wren).
lempus(X) :- impus(X).
~transparent(X) :- lempus(X).
transparent(X) :- numpus(X).
?- transparent(wren).
""",
        "SAT": """objects: wren
constraints:
impus(wren) -> lempus(wren)
options:
transparent(wren)
""",
        "select": select("FOL", "Every premise is a universal rule over kinds of objects."),
    },
    {
        "id": "pq05",
        "context": ["Every sterpus is a gorpus.", "Every gorpus is a brimpus.",
                    "Every brimpus is happy.", "Polly is a sterpus."],
        "question": Q_TF + "Polly is not happy.",
        "answer_index": 1,
        "FOL": """PREMISES:
forall x. (Sterpus(x) -> Gorpus(x))
forall x. (Gorpus(x) -> Brimpus(x))
forall x. (Brimpus(x) -> Happy(x))
Sterpus(polly)
GOAL:
~Happy(polly)
""",
        "LP": """sterpus(polly).
gorpus(X) :- sterpus(X).
brimpus(X) :- gorpus(X).
happy(X) :- brimpus(X).
?- happy(polly).
""",
        "SAT": "objects: polly\nconstraints:\nsterpus(polly)\n",
        "select": select("FOL", "Quantified category statements; first-order logic is the natural fit."),
    },
    {
        "id": "pq06",
        "context": ["Every shumpus is cold.", "Each shumpus is a grimpus.",
                    "Every grimpus is not large.", "Fae is a shumpus."],
        "question": Q_TF + "Fae is large.",
        "answer_index": 1,
        "FOL": """PREMISES:
forall x. (Shumpus(x) -> Cold(x))
forall x. (Shumpus(x) -> Grimpus(x))
forall x. (Grimpus(x) -> ~Large(x))
Shumpus(fae)
GOAL:
Large(fae)
""",
        "LP": """shumpus(fae).
cold(X) :- shumpus(X).
grimpus(X) :- shumpus(X).
~large(X) :- grimpus(X).
?- large(fae).
""",
        "SAT": "No positions or orderings are involved.\n",
        "select": select("FOL", "FOL handles these universal class relations."),
    },
    {
        "id": "pq07",
        "context": ["Every tumpus is a wumpus.", "Every wumpus is not small.",
                    "Each yumpus is small.", "Rex is a tumpus."],
        "question": Q_TF + "Rex is a yumpus.",
        "answer_index": 1,
        "FOL": """PREMISES:
forall x. (Tumpus(x) -> Wumpus(x))
forall x. (Wumpus(x) -> ~Small(x))
forall x. (Yumpus(x) -> Small(x))
Tumpus(rex)
GOAL:
Yumpus(rex)
""",
        "LP": """tumpus(rex)
wumpus(X) :- tumpus(X).
~small(X) :- wumpus(X).
small(X) :- yumpus(X).
?- yumpus(rex).
""",
        "SAT": """objects: rex
constraints:
pos(rex) != pos(yumpus)
options:
pos(rex) = 1
""",
        "select": select("LP", "The rules can be applied step by step as a logic program."),
    },
    {
        "id": "pq08",
        "context": ["All brimpuses are vumpuses.", "Every vumpus is fast.",
                    "Each fast thing is loud.", "Stella is a brimpus."],
        "question": Q_TF + "Stella is loud.",
        "answer_index": 0,
        "FOL": """PREMISES:
forall x. (Brimpus(x) -> Vumpus(x))
forall x. (Vumpus(x) -> Fast(x))
forall x. (Fast(x) -> Loud(x))
Brimpus(stella)
GOAL:
Loud(stella)
""",
        "LP": """brimpus(stella).
vumpus(X) :- brimpus(X).
fast(X) :- vumpus(X).
loud(X) :- fast(X).
?- loud(stella).
""",
        "SAT": "objects:\nconstraints:\noptions:\nloud(stella)\n",
        "select": select("FOL", "Universal statements and a membership fact, so FOL."),
    },
    {
        "id": "pq09",
        "context": ["Every lorpus is a jompus.", "Every jompus is a zumpus.",
                    "Each zumpus is not opaque.", "Sam is a lorpus."],
        "question": Q_TF + "Sam is opaque.",
        "answer_index": 1,
        "FOL": """PREMISES:
forall x. (Lorpus(x) -> Jompus(x))
forall x. (Jompus(x) -> Zumpus(x))
forall x. (Zumpus(x) -> ~Opaque(x))
Lorpus(sam)
GOAL:
Opaque(sam)
""",
        "LP": """lorpus(sam).
jompus(X) :- lorpus(X).
zumpus(X) :- jompus(X).
~opaque(X) :- zumpus(X).
?- opaque(sam).
""",
        "SAT": """objects: sam
constraints:
lorpus(sam)
options:
opaque(sam)
""",
        "select": select("FOL", "This is a chain of 'every X is a Y' statements."),
    },
    {
        "id": "pq10",
        "context": ["Every numpus is a dumpus.", "Every dumpus is wooden.",
                    "Every rompus is not wooden.", "Tim is a numpus."],
        "question": Q_TF + "Tim is a rompus.",
        "answer_index": 1,
        "FOL": """PREMISES:
forall x. (Numpus(x) -> Dumpus(x))
forall x. (Dumpus(x) -> Wooden(x))
forall x. (Rompus(x) -> ~Wooden(x))
Numpus(tim)
GOAL:
Rompus(tim)
""",
        "LP": """numpus(tim).
dumpus(X) :- numpus(X).
wooden(X) :- dumpus(X).
~wooden(X) :- rompus(X).
?- rompus(tim).
""",
        "SAT": "objects: tim\n",
        "select": select("FOL", "Deciding class membership from universal rules calls for FOL."),
    },
]


PROOFWRITER = [
    {
        "id": "pw01",
        "context": ["The bear is kind.", "The bear is not young.",
                    "If something is kind then it is nice.",
                    "If something is nice and not young then it is round."],
        "question": Q_TFU + "The bear is round.",
        "answer_index": 0,
        "FOL": """PREMISES:
Kind(bear)
~Young(bear)
forall x. (Kind(x) -> Nice(x))
forall x. (Nice(x) & ~Young(x) -> Round(x))
GOAL:
Round(bear)
""",
        "LP": """kind(bear).
~young(bear).
nice(X) :- kind(X).
round(X) :- nice(X), ~young(X).
?- round(bear).
""",
        "SAT": "objects: bear\nconstraints:\nkind(bear)\noptions:\nround(bear)\n",
        "select": select("LP", "Facts plus if-then rules: a logic program can chain them."),
    },
    {
        "id": "pw02",
        "context": ["The cat chases the dog.", "The dog is red.",
                    "If something chases the dog then it is blue.",
                    "If something is blue then it likes the mouse."],
        "question": Q_TFU + "The cat does not like the mouse.",
        "answer_index": 1,
        "FOL": """PREMISES:
Chases(cat, dog)
Red(dog)
forall x. (Chases(x, dog) -> Blue(x))
forall x. (Blue(x) -> Likes(x, mouse))
GOAL:
~Likes(cat, mouse)
""",
        "LP": """chases(cat, dog).
red(dog).
blue(X) :- chases(X, dog).
likes(X, mouse) :- blue(X).
?- ~likes(cat, mouse).
""",
        "SAT": "The problem is about rules, not positions.\n",
        "select": select("LP", "Rule-based deduction over facts."),
    },
    {
        "id": "pw03",
        "context": ["The lion is big.", "If something is big then it is strong.",
                    "If something is strong and cold then it eats the cow."],
        "question": Q_TFU + "The lion eats the cow.",
        "answer_index": 2,
        "FOL": """PREMISES:
Big(lion)
forall x. (Big(x) -> Strong(x))
forall x. (Strong(x) & Cold(x) -> Eats(x, cow))
GOAL:
Eats(lion, cow)
""",
        "LP": """big(lion).
strong(X) :- big(X).
eats(X, cow) :- strong(X), cold(X).
?- eats(lion, cow).
""",
        "SAT": """objects: lion, cow
constraints:
pos(lion) < pos(cow)
options:
pos(lion) = 1
""",
        "select": select("LP", "Conditional rules over named entities; use LP."),
    },
    {
        "id": "pw04",
        "context": ["The mouse is green.", "The mouse is not rough.",
                    "If something is green then it sees the cat.",
                    "If something sees the cat and is not rough then it is quiet."],
        "question": Q_TFU + "The mouse is quiet.",
        "answer_index": 0,
        "FOL": """PREMISES:
Green(mouse)
~Rough(mouse)
forall x. (Green(x) -> Sees(x, cat))
forall x. (Sees(x, cat) & Rough(x) -> Quiet(x))
GOAL:
Quiet(mouse)
""",
        "LP": """green(mouse).
~rough(mouse).
sees(X, cat) :- green(X).
quiet(X) :- sees(X, cat), ~rough(X).
?- quiet(mouse).
""",
        "SAT": "objects: mouse, cat\nconstraints:\nsees(mouse, cat)\n",
        "select": select("LP", "The if-then structure maps directly to rules."),
    },
    {
        "id": "pw05",
        "context": ["Anne is cold.", "Anne is smart.",
                    "If someone is cold then they are not furry.",
                    "If someone is smart and not furry then they are white."],
        "question": Q_TFU + "Anne is not white.",
        "answer_index": 1,
        "FOL": """PREMISES:
Cold(anne)
Smart(anne)
forall x. (Cold(x) -> ~Furry(x))
forall x. (Smart(x) & ~Furry(x) -> White(x))
GOAL:
~White(anne)
""",
        "LP": """cold(anne).
smart(anne).
~furry(X) :- cold(X).
white(X) :- smart(X), ~furry(X).
?- ~white(anne).
""",
        "SAT": "Not an ordering problem.\n",
        "select": select("LP", "Forward chaining over the rules settles the statement."),
    },
    {
        "id": "pw06",
        "context": ["The rabbit visits the squirrel.",
                    "If something visits the squirrel then the squirrel is big.",
                    "If the squirrel is big then the squirrel is rough."],
        "question": Q_TFU + "The squirrel is rough.",
        "answer_index": 0,
        "FOL": """PREMISES:
Visits(rabbit, squirrel)
forall x. (Visits(x, squirrel) -> Big(squirrel))
Big(squirrel) -> Rough(squirrel)
GOAL:
Rough(squirrel)
""",
        "LP": """visits(rabbit, squirrel).
big(squirrel) :- visits(X, squirrel).
rough(squirrel) :- big(squirrel).
?- rough(squirrel).
""",
        "SAT": """objects: rabbit, squirrel
constraints:
pos(rabbit) < pos(squirrel)
options:
pos(squirrel) = 2
""",
        "select": select("FOL", "There is a universally quantified rule, so FOL."),
    },
    {
        "id": "pw07",
        "context": ["Dave is young.", "If someone is young then they are kind.",
                    "If someone is kind then they are not big."],
        "question": Q_TFU + "Dave is big.",
        "answer_index": 1,
        "FOL": """PREMISES:
Young(dave)
forall x (Young(x) -> Kind(x)
forall x. (Kind(x) -> ~Big(x))
GOAL:
Big(dave)
""",
        "LP": """young(dave).
kind(X) :- young(X).
~big(X) :- kind(X).
?- big(dave).
""",
        "SAT": "objects: dave\nconstraints:\nyoung(dave)\noptions:\nbig(dave)\n",
        "select": "Both FOL and LP could work here, depending on the solver available.",
    },
    {
        "id": "pw08",
        "context": ["The dog is blue.", "If something is blue then it is cold.",
                    "If something is cold and round then it is nice."],
        "question": Q_TFU + "The dog is nice.",
        "answer_index": 2,
        "FOL": """PREMISES:
Blue(dog)
forall x. (Blue(x) -> Cold(x))
forall x. (Cold(x) -> Nice(x))
GOAL:
Nice(dog)
""",
        "LP": """blue(dog).
cold(X) :- blue(X).
nice(X) :- cold(X), round(X).
?- nice(dog).
""",
        "SAT": "objects: dog\nconstraints:\npos(dog) = 1\noptions:\n",
        "select": select("FOL", "Quantified conditionals; FOL."),
    },
    {
        "id": "pw09",
        "context": ["Erin is red.", "Erin is not kind.",
                    "If someone is red and kind then they are quiet.",
                    "If someone is red and not kind then they are rough."],
        "question": Q_TFU + "Erin is rough.",
        "answer_index": 0,
        "FOL": """PREMISES:
Red(erin)
~Kind(erin)
forall x. (Red(x) & Kind(x) -> Quiet(x))
forall x. (Red(x) & ~Kind(x) -> Rough(x))
GOAL:
Rough(erin)
""",
        "LP": """red(erin).
~kind(erin).
quiet(X) :- red(X), kind(X).
rough(X) :- red(X), ~kind(X).
?- rough(erin).
""",
        "SAT": "I cannot express these rules as positions.\n",
        "select": select("LP", "A logic program with negated facts fits."),
    },
    {
        "id": "pw10",
        "context": ["The cow eats the bear.", "If something eats the bear then it is hungry.",
                    "If something is hungry then it does not visit the bear."],
        "question": Q_TFU + "The cow visits the bear.",
        "answer_index": 1,
        "FOL": """PREMISES:
Eats(cow, bear)
forall x. (Eats(x, bear) -> Hungry(x))
forall x. (Hungry(x) -> ~Visits(x, bear))
GOAL:
Visits(cow, bear)
""",
        "LP": """eats(cow, bear).
hungry(X) :- eats(X, bear).
~visits(X, bear) :- hungry(X).
?- visits(cow, bear).
""",
        "SAT": "objects: cow, bear\nconstraints:\neats(cow, bear)\n",
        "select": select("LP", "The rules chain from the single fact; LP."),
    },
]


def _mc(*options: str) -> list[str]:
    return [f"{chr(65 + i)}) {o}" for i, o in enumerate(options)]


LOGICAL_DEDUCTION = [
    {
        "id": "ld01",
        "context": ["On a shelf, there are three books: a red book, a gray book, and a white book.",
                    "The gray book is to the left of the white book.",
                    "The red book is the rightmost."],
        "question": Q_MC,
        "options": _mc("The gray book is the leftmost.", "The white book is the leftmost.",
                       "The red book is the second from the left."),
        "answer_index": 0,
        "SAT": """objects: red_book, gray_book, white_book
constraints:
pos(gray_book) < pos(white_book)
pos(red_book) = 3
options:
pos(gray_book) = 1
pos(white_book) = 1
pos(red_book) = 2
""",
        "FOL": """PREMISES:
LeftOf(gray_book, white_book)
Rightmost(red_book)
GOAL:
Leftmost(gray_book)
""",
        "LP": """left_of(gray_book, white_book).
rightmost(red_book).
leftmost(white_book) :- rightmost(red_book).
?- leftmost(gray_book).
---
left_of(gray_book, white_book).
rightmost(red_book).
leftmost(white_book) :- rightmost(red_book).
?- leftmost(white_book).
---
left_of(gray_book, white_book).
rightmost(red_book).
leftmost(white_book) :- rightmost(red_book).
?- second(red_book).
""",
        "select": select("SAT", "Objects must be placed in distinct positions; a constraint solver fits."),
    },
    {
        "id": "ld02",
        "context": ["In an antique car show, there are three vehicles: a truck, a sedan, and a bus.",
                    "The bus is newer than the truck.", "The sedan is the oldest."],
        "question": Q_MC,
        "options": _mc("The truck is the newest.", "The bus is the newest.",
                       "The sedan is the second-newest."),
        "answer_index": 1,
        "SAT": """objects: truck, sedan, bus
constraints:
pos(bus) > pos(truck)
pos(sedan) = 1
options:
pos(truck) = 3
pos(bus) = 3
pos(sedan) = 2
""",
        "FOL": """PREMISES:
Oldest(sedan)
NewerThan(bus, truck)
forall x. (Oldest(x) -> ~Newest(x))
forall x y. (NewerThan(x, y) -> ~Newest(y))
Newest(truck) | Newest(bus) | Newest(sedan)
GOAL:
Newest(truck)
---
PREMISES:
Oldest(sedan)
NewerThan(bus, truck)
forall x. (Oldest(x) -> ~Newest(x))
forall x y. (NewerThan(x, y) -> ~Newest(y))
Newest(truck) | Newest(bus) | Newest(sedan)
GOAL:
Newest(bus)
---
PREMISES:
Oldest(sedan)
NewerThan(bus, truck)
forall x. (Oldest(x) -> ~Newest(x))
forall x y. (NewerThan(x, y) -> ~Newest(y))
Newest(truck) | Newest(bus) | Newest(sedan)
GOAL:
SecondNewest(sedan)
""",
        "LP": """oldest(sedan).
newer(bus, truck).
newest(X) :- newer(X, Y), ~oldest(X).
?- newest(truck).
---
oldest(sedan).
newer(bus, truck).
newest(X) :- newer(X, Y), ~oldest(X).
?- newest(bus).
---
oldest(sedan).
newer(bus, truck).
newest(X) :- newer(X, Y), ~oldest(X).
?- second_newest(sedan).
""",
        "select": select("SAT", "Relative ages of three vehicles form an ordering; SAT."),
    },
    {
        "id": "ld03",
        "context": ["In a golf tournament, there were three golfers: Ana, Eli, and Joe.",
                    "Eli finished above Ana.", "Joe finished last."],
        "question": Q_MC,
        "options": _mc("Ana finished first.", "Eli finished first.", "Joe finished second."),
        "answer_index": 1,
        "SAT": """objects: ana, eli, joe
constraints:
pos(eli) < pos(ana)
pos(joe) = 3
options:
pos(ana) = 1
pos(eli) = 1
pos(joe) = 2
""",
        "FOL": """PREMISES:
Above(eli, ana)
Last(joe)
forall x. (Last(x) -> ~First(x))
forall x y. (Above(x, y) -> ~First(y))
First(ana) | First(eli) | First(joe)
GOAL:
First(ana)
---
PREMISES:
Above(eli, ana)
Last(joe)
forall x. (Last(x) -> ~First(x))
forall x y. (Above(x, y) -> ~First(y))
First(ana) | First(eli) | First(joe)
GOAL:
First(eli)
---
PREMISES:
Above(eli, ana)
Last(joe)
GOAL:
Second(joe)
""",
        "LP": """above(eli, ana).
last(joe).
first(X) :- above(X, Y), ~last(X).
?- first(ana).
""",
        "select": select("SAT", "Finishing order of golfers: a small ordering constraint problem."),
    },
    {
        "id": "ld04",
        "context": ["A fruit stand sells four fruits: apples, pears, plums, and kiwis.",
                    "The pears are cheaper than the plums.", "The kiwis are the cheapest.",
                    "The apples are more expensive than the plums."],
        "question": Q_MC,
        "options": _mc("The plums are the second-cheapest.", "The apples are the most expensive.",
                       "The pears are the most expensive.", "The kiwis are the second-cheapest."),
        "answer_index": 1,
        "SAT": """objects: apples, pears, plums, kiwis
constraints:
pos(pears) < pos(plums)
pos(kiwis) = 1
pos(apples) > pos(plums)
options:
pos(plums) = 2
pos(apples) = 4
pos(pears) = 4
pos(kiwis) = 2
""",
        "FOL": """PREMISES:
Cheaper(pears, plums)
Cheapest(kiwis)
Pricier(apples, plums)
GOAL:
SecondCheapest(plums)
---
PREMISES:
Cheaper(pears, plums)
Cheapest(kiwis)
Pricier(apples, plums)
GOAL:
MostExpensive(apples)
""",
        "LP": """cheaper(pears, plums).
cheapest(kiwis).
pricier(apples, plums).
most_expensive(X) :- pricier(X, plums).
?- second_cheapest(plums).
---
cheaper(pears, plums).
cheapest(kiwis).
pricier(apples, plums).
most_expensive(X) :- pricier(X, plums).
?- most_expensive(apples).
---
cheaper(pears, plums).
cheapest(kiwis).
pricier(apples, plums).
most_expensive(X) :- pricier(X, plums).
?- most_expensive(pears).
---
cheaper(pears, plums).
cheapest(kiwis).
pricier(apples, plums).
most_expensive(X) :- pricier(X, plums).
?- second_cheapest(kiwis).
""",
        "select": select("SAT", "Prices impose a total order over four fruits."),
    },
    {
        "id": "ld05",
        "context": ["On a branch, there are four birds: a robin, a wren, a jay, and a hawk.",
                    "The hawk is the second from the left.", "The robin is to the right of the jay.",
                    "The wren is the rightmost."],
        "question": Q_MC,
        "options": _mc("The jay is the leftmost.", "The robin is the leftmost.",
                       "The hawk is the third from the left.", "The wren is the second from the left."),
        "answer_index": 0,
        "SAT": """objects: robin, wren, jay, hawk
constraints:
pos(hawk) = 2
pos(robin) > pos(jay)
pos(wren) = 4
options:
pos(jay) = 1
pos(robin) = 1
pos(hawk) = 3
pos(wren) = 2
""",
        "FOL": """PREMISES:
Pos2(hawk)
Pos4(wren)
RightOf(robin, jay)
forall x y. (RightOf(x, y) -> ~Pos1(x))
Pos1(robin) | Pos1(jay)
GOAL:
Pos1(jay)
---
PREMISES:
Pos2(hawk)
Pos4(wren)
RightOf(robin, jay)
forall x y. (RightOf(x, y) -> ~Pos1(x))
Pos1(robin) | Pos1(jay)
GOAL:
Pos1(robin)
---
PREMISES:
Pos2(hawk)
Pos4(wren)
GOAL:
Pos3(hawk)
---
PREMISES:
Pos2(hawk)
Pos4(wren)
GOAL:
Pos2(wren)
""",
        "LP": """pos2(hawk).
pos4(wren).
right_of(robin, jay).
pos1(Y) :- right_of(X, Y).
?- pos1(jay).
---
pos2(hawk).
pos4(wren).
right_of(robin, jay).
pos1(Y) :- right_of(X, Y).
?- pos1(robin).
---
pos2(hawk).
pos4(wren).
right_of(robin, jay).
pos1(Y) :- right_of(X, Y).
?- pos3(hawk).
---
pos2(hawk).
pos4(wren).
right_of(robin, jay).
pos1(Y) :- right_of(X, Y).
?- pos2(wren).
""",
        "select": select("SAT", "Left-to-right placement of birds is a constraint satisfaction problem."),
    },
    {
        "id": "ld06",
        "context": ["On a shelf, there are five books: a blue book, a green book, an orange book,"
                    " a black book, and a brown book.",
                    "The green book is the leftmost.", "The black book is to the right of the orange book.",
                    "The blue book is the second from the right.",
                    "The brown book is the third from the left.",
                    "The orange book is to the right of the green book."],
        "question": Q_MC,
        "options": _mc("The black book is the rightmost.", "The orange book is the rightmost.",
                       "The blue book is the leftmost.", "The brown book is the second from the left.",
                       "The green book is the rightmost."),
        "answer_index": 0,
        "SAT": """objects: blue_book, green_book, orange_book, black_book, brown_book
constraints:
pos(green_book) = 1
pos(black_book) > pos(orange_book)
pos(blue_book) = 4
pos(brown_book) = 3
pos(orange_book) > pos(green_book)
options:
pos(black_book) = 5
pos(orange_book) = 5
pos(blue_book) = 1
pos(brown_book) = 2
pos(green_book) = 5
""",
        "FOL": """PREMISES:
Leftmost(green_book)
RightOf(black_book, orange_book)
GOAL:
Rightmost(black_book)
""",
        "LP": """leftmost(green_book).
right_of(black_book, orange_book).
rightmost(X) :- right_of(X, Y).
?- rightmost(black_book).
---
leftmost(green_book).
right_of(black_book, orange_book).
rightmost(X) :- right_of(X, Y).
?- rightmost(orange_book).
---
leftmost(green_book).
right_of(black_book, orange_book).
rightmost(X) :- right_of(X, Y).
?- leftmost(blue_book).
---
leftmost(green_book).
right_of(black_book, orange_book).
rightmost(X) :- right_of(X, Y).
?- second(brown_book).
---
leftmost(green_book).
right_of(black_book, orange_book).
rightmost(X) :- right_of(X, Y).
?- rightmost(green_book).
""",
        "select": select("SAT", "Five books in a fixed left-to-right order: SAT."),
    },
    {
        "id": "ld07",
        "context": ["Three friends, Kim, Lee, and Mo, compare ages.",
                    "Kim is older than Mo.", "Lee is younger than Mo."],
        "question": Q_MC,
        "options": _mc("Lee is the oldest.", "Mo is the oldest.", "Kim is the oldest."),
        "answer_index": 2,
        "SAT": """objects: kim, lee, mo
constraints:
pos(kim) < pos(mo)
pos(lee) > pos(mo)
options:
pos(lee) = 1
pos(mo) = 1
pos(kim) = 1
""",
        "FOL": """PREMISES:
Older(kim, mo)
Older(mo, lee)
forall x y. (Older(x, y) -> ~Oldest(y))
Oldest(kim) | Oldest(lee) | Oldest(mo)
GOAL:
Oldest(lee)
---
PREMISES:
Older(kim, mo)
Older(mo, lee)
forall x y. (Older(x, y) -> ~Oldest(y))
Oldest(kim) | Oldest(lee) | Oldest(mo)
GOAL:
Oldest(mo)
---
PREMISES:
Older(kim, mo)
Older(mo, lee)
forall x y. (Older(x, y) -> ~Oldest(y))
Oldest(kim) | Oldest(lee) | Oldest(mo)
GOAL:
Oldest(kim)
""",
        "LP": """older(kim, mo).
older(mo, lee).
~oldest(Y) :- older(X, Y).
oldest(kim) :- ~oldest(mo), ~oldest(lee).
?- oldest(lee).
---
older(kim, mo).
older(mo, lee).
~oldest(Y) :- older(X, Y).
oldest(kim) :- ~oldest(mo), ~oldest(lee).
?- oldest(mo).
---
older(kim, mo).
older(mo, lee).
~oldest(Y) :- older(X, Y).
oldest(kim) :- ~oldest(mo), ~oldest(lee).
?- oldest(kim).
""",
        "select": select("SAT", "Comparing ages gives an ordering of three people."),
    },
    {
        "id": "ld08",
        "context": ["In a parking row, there are four cars: a taxi, a van, a jeep, and a coupe.",
                    "The van is to the left of the jeep.", "The coupe is the rightmost.",
                    "The taxi is to the left of the van."],
        "question": Q_MC,
        "options": _mc("The jeep is the second from the left.", "The van is the second from the left.",
                       "The taxi is the third from the left."),
        "answer_index": 1,
        "SAT": """objects: taxi, van, jeep, coupe
constraints:
pos(van) < pos(jeep)
pos(coupe) = 4
pos(taxi) < pos(van)
options:
pos(jeep) = 2
pos(van) = 2
pos(taxi) = 3
""",
        "FOL": """PREMISES:
LeftOf(van, jeep)
LeftOf(taxi, van)
Rightmost(coupe)
forall x y z. (LeftOf(x, y) & LeftOf(y, z) & Rightmost(z) -> Second(x))
GOAL:
Second(jeep)
---
PREMISES:
LeftOf(van, jeep)
LeftOf(taxi, van)
Rightmost(coupe)
forall x y z. (LeftOf(x, y) & LeftOf(y, z) -> Second(x))
GOAL:
Second(van)
""",
        "LP": """left_of(van, jeep).
left_of(taxi, van).
rightmost(coupe).
second(Y) :- left_of(X, Y), left_of(Y, Z).
?- second(jeep).
---
left_of(van, jeep).
left_of(taxi, van).
rightmost(coupe).
second(Y) :- left_of(X, Y), left_of(Y, Z).
?- second(van).
---
left_of(van, jeep).
left_of(taxi, van).
rightmost(coupe).
second(Y) :- left_of(X, Y), left_of(Y, Z).
?- third(taxi).
""",
        "select": select("SAT", "Left-of relations among cars; an ordering solver handles this."),
    },
    {
        "id": "ld09",
        "context": ["A store sells three items: a lamp, a desk, and a chair.",
                    "The chair is less expensive than the lamp.", "The desk is the cheapest."],
        "question": Q_MC,
        "options": _mc("The lamp is the cheapest.", "The chair is the most expensive.",
                       "The lamp is the most expensive.", "The desk is the most expensive."),
        "answer_index": 2,
        "SAT": """objects: lamp, desk, chair
constraints:
pos(chair) < pos(lamp)
pos(desk) = 1
options:
pos(lamp) = 1
pos(chair) = 3
pos(lamp) = 3
pos(desk) = 3
""",
        "FOL": """PREMISES:
Cheaper(chair, lamp)
Cheapest(desk)
forall x y. (Cheaper(x, y) -> ~MostExpensive(x))
forall x. (Cheapest(x) -> ~MostExpensive(x))
MostExpensive(lamp) | MostExpensive(desk) | MostExpensive(chair)
GOAL:
Cheapest(lamp)
---
PREMISES:
Cheaper(chair, lamp)
Cheapest(desk)
forall x y. (Cheaper(x, y) -> ~MostExpensive(x))
forall x. (Cheapest(x) -> ~MostExpensive(x))
MostExpensive(lamp) | MostExpensive(desk) | MostExpensive(chair)
GOAL:
MostExpensive(chair)
---
PREMISES:
Cheaper(chair, lamp)
Cheapest(desk)
forall x y. (Cheaper(x, y) -> ~MostExpensive(x))
forall x. (Cheapest(x) -> ~MostExpensive(x))
MostExpensive(lamp) | MostExpensive(desk) | MostExpensive(chair)
GOAL:
MostExpensive(lamp)
---
PREMISES:
Cheaper(chair, lamp)
Cheapest(desk)
forall x y. (Cheaper(x, y) -> ~MostExpensive(x))
forall x. (Cheapest(x) -> ~MostExpensive(x))
MostExpensive(lamp) | MostExpensive(desk) | MostExpensive(chair)
GOAL:
MostExpensive(desk)
""",
        "LP": """cheaper(chair, lamp).
cheapest(desk).
most_expensive(Y) :- cheaper(X, Y).
?- cheapest(lamp).
---
cheaper(chair, lamp).
cheapest(desk).
most_expensive(Y) :- cheaper(X, Y).
?- most_expensive(chair).
---
cheaper(chair, lamp).
cheapest(desk).
most_expensive(Y) :- cheaper(X, Y).
?- most_expensive(lamp).
---
cheaper(chair, lamp).
cheapest(desk).
most_expensive(Y) :- cheaper(X, Y).
?- most_expensive(desk).
""",
        "select": select("SAT", "Relative prices define a ranking of three items."),
    },
    {
        "id": "ld10",
        "context": ["In a race, there were five runners: Ada, Ben, Cy, Dee, and Eve.",
                    "Ben finished above Cy.", "Eve finished last.", "Ada finished second.",
                    "Dee finished above Ben."],
        "question": Q_MC,
        "options": _mc("Ben finished third.", "Cy finished third.", "Dee finished third.",
                       "Eve finished third.", "Ada finished third."),
        "answer_index": 0,
        "SAT": """objects: ada, ben, cy, dee, eve
constraints:
pos(ben) < pos(cy)
pos(eve) = 5
pos(ada) = 3
pos(dee) < pos(ben)
options:
pos(ben) = 3
pos(cy) = 3
pos(dee) = 3
pos(eve) = 3
pos(ada) = 3
""",
        "FOL": """PREMISES:
Above(ben, cy)
Last(eve)
Second(ada)
Above(dee, ben)
GOAL:
Third(ben)
""",
        "LP": """above(ben, cy).
last(eve).
second(ada).
above(dee, ben).
third(X) :- above(X, Y), above(Z, X)
?- third(ben).
""",
        "select": select("SAT", "Race finishing positions are a permutation; SAT."),
    },
]

for _p in PRONTOQA:
    _p["source"], _p["options"] = "ProntoQA", TF
for _p in PROOFWRITER:
    _p["source"], _p["options"] = "ProofWriter", TFU
for _p in LOGICAL_DEDUCTION:
    _p["source"] = "LogicalDeduction"

CORPUS = PRONTOQA + PROOFWRITER + LOGICAL_DEDUCTION
