"""Hand-built tables used across the test suite.

The Chelsea cup-run table reproduces the cells behind the worked example
(QF/QFR attendances, the R4 round and its result, the two-legged ties) so
tests can pin the exact expected strings. The remaining tables give each
generator a natural home: conjunctions over birds, arithmetic superlatives
over launches, counting over elections, date differences over concerts, and
so on.
"""

from __future__ import annotations

from tabrc.tables import TypedTable, ingest, raw_table_from_json

CHELSEA = {
    "id": "chelsea-league-cup-1990-91",
    "page_title": "1990-91 Chelsea F.C. season",
    "table_title": "League Cup",
    "header": ["Round", "Date", "Opponent", "Result", "Attendance"],
    "rows": [
        ["PR", "14 August 1990", "Brentford", "2-2", "8,206"],
        ["PRR", "21 August 1990", "Brentford", "1-0", "7,842"],
        ["R1 1st Leg", "28 August 1990", "Colchester United", "4-0", "4,512"],
        ["R1 2nd Leg", "4 September 1990", "Colchester United", "2-0", "6,148"],
        ["R2 1st Leg", "26 September 1990", "Walsall", "5-0", "5,666"],
        ["R2 2nd Leg", "10 October 1990", "Walsall", "4-1 (won 9-1 on agg)", "10,037"],
        ["R3", "31 October 1990", "Portsmouth", "0-0", "16,699"],
        ["R3R", "6 November 1990", "Portsmouth", "3-2", "16,085"],
        ["R4", "28 November 1990", "Oxford United", "2-1", "9,789"],
        ["QF", "16 January 1991", "Tottenham Hotspur", "0-0", "34,178"],
        ["QFR", "23 January 1991", "Tottenham Hotspur", "3-0", "33,861"],
        ["SF 1st Leg", "24 February 1991", "Sheffield Wednesday", "0-2", "34,074"],
        ["SF 2nd Leg", "27 February 1991", "Sheffield Wednesday", "1-3", "34,669"],
    ],
}

BIRDS = {
    "id": "endemic-birds-japan",
    "page_title": "List of endemic birds of Japan",
    "table_title": "List of species",
    "header": ["Common name", "Family", "Distribution", "Status"],
    "rows": [
        ["Okinawa woodpecker", "Picidae", "Okinawa", "Critically endangered"],
        ["Japanese woodpecker", "Picidae", "Honshu", "Least concern"],
        ["Okinawa rail", "Rallidae", "Okinawa", "Endangered"],
        ["Amami woodcock", "Scolopacidae", "Amami", "Vulnerable"],
        ["Izu thrush", "Turdidae", "Izu Islands", "Vulnerable"],
        ["Bonin white-eye", "Zosteropidae", "Bonin Islands", "Vulnerable"],
        ["Japanese accentor", "Prunellidae", "Honshu", "Least concern"],
        ["Ryukyu minivet", "Campephagidae", "Ryukyu Islands", "Least concern"],
        ["Amami thrush", "Turdidae", "Amami", "Endangered"],
        ["Japanese green pigeon", "Columbidae", "Honshu", "Least concern"],
        ["Ryukyu robin", "Muscicapidae", "Ryukyu Islands", "Least concern"],
        ["Iriomote tit", "Paridae", "Iriomote", "Vulnerable"],
    ],
}

LAUNCHES = {
    "id": "spaceflight-1961-rockets",
    "page_title": "1961 in spaceflight",
    "table_title": "By rocket",
    "header": ["Rocket", "Country", "Launches", "Successes", "Remarks"],
    "rows": [
        ["Vostok-K", "USSR", "6", "5", "Crewed flights"],
        ["Atlas LV-3B", "USA", "4", "3", "Orbital tests"],
        ["Redstone MRLV", "USA", "3", "2", "Suborbital"],
        ["Scout X-1", "USA", "5", "2", "Maiden flight"],
        ["Thor DM-21 Agena-B", "USA", "9", "7", "Reconnaissance"],
        ["Juno II", "USA", "2", "1", "Final flights"],
        ["Atlas-Agena B", "USA", "4", "2", "Maiden flight"],
        ["Molniya", "USSR", "4", "1", "Planetary probes"],
        ["Kosmos-2I", "USSR", "2", "0", "Maiden flight"],
        ["Blue Scout II", "USA", "2", "1", "Maiden flight"],
    ],
}

ELECTIONS = {
    "id": "npp-presidential-elections",
    "page_title": "New Patriotic Party",
    "table_title": "Presidential elections",
    "header": ["Election", "Candidate", "Votes", "Share", "Outcome"],
    "rows": [
        ["1992", "Albert Adu Boahen", "1,213,078", "30.4%", "Lost"],
        ["1996", "John Kufuor", "2,834,878", "39.6%", "Lost"],
        ["2000", "John Kufuor", "3,131,739", "48.2%", "Runoff"],
        ["2000 (runoff)", "John Kufuor", "3,631,263", "56.9%", "Won"],
        ["2004", "John Kufuor", "4,524,074", "52.4%", "Won"],
        ["2008", "Nana Akufo-Addo", "4,159,439", "49.1%", "Lost"],
        ["2012", "Nana Akufo-Addo", "5,248,898", "47.7%", "Lost"],
        ["2016", "Nana Akufo-Addo", "5,716,026", "53.8%", "Won"],
        ["2020", "Nana Akufo-Addo", "6,730,587", "51.3%", "Won"],
        ["2024", "Mahamudu Bawumia", "4,657,304", "41.6%", "Lost"],
    ],
}

CONCERTS = {
    "id": "candlestick-park-concerts",
    "page_title": "Candlestick Park",
    "table_title": "Notable events | Concerts",
    "header": ["Date", "Artist", "Event", "Attendance"],
    "rows": [
        ["29 August 1966", "The Beatles", "Final commercial concert", "25,000"],
        ["14 August 2014", "Paul McCartney", "Farewell to Candlestick", "49,000"],
        ["2 June 1983", "The Who", "North American tour", "43,000"],
        ["13 July 1987", "U2", "The Joshua Tree Tour", "58,000"],
        ["5 September 1992", "Metallica", "Wherever We May Roam", "41,000"],
        ["18 May 1997", "Tina Turner", "Wildest Dreams Tour", "32,000"],
        ["10 October 1981", "The Rolling Stones", "American Tour 1981", "72,000"],
        ["26 April 1990", "Madonna", "Blond Ambition Tour", "39,000"],
        ["21 September 2002", "Green Day", "Pop Disaster Tour", "35,000"],
        ["30 June 2008", "Bon Jovi", "Lost Highway Tour", "38,000"],
    ],
}

EMPLOYERS = {
    "id": "chula-vista-top-employers",
    "page_title": "Chula Vista, California",
    "table_title": "Top employers",
    "header": ["Rank", "Employer", "Employees", "Sector"],
    "rows": [
        ["1", "Sweetwater Union High School District", "3,900", "Education"],
        ["2", "Chula Vista Elementary School District", "3,268", "Education"],
        ["3", "Southwestern College", "2,321", "Education"],
        ["4", "Sharp Chula Vista Medical Center", "2,000", "Health care"],
        ["5", "City of Chula Vista", "1,096", "Government"],
        ["6", "Walmart", "1,050", "Retail"],
        ["7", "Scripps Mercy Hospital", "986", "Health care"],
        ["8", "Rohr Inc.", "900", "Aerospace"],
        ["9", "Target", "740", "Retail"],
        ["10", "Costco", "644", "Retail"],
    ],
}

EUROVISION = {
    "id": "eurovision-1959-results",
    "page_title": "Eurovision Song Contest 1959",
    "table_title": "Results",
    "header": ["Draw", "Artist", "Song", "Language", "Points"],
    "rows": [
        ["1", "Jean Philippe", "Oui oui oui oui", "French", "15"],
        ["2", "Birthe Wilke", "Uh jeg ville onske", "Danish", "16"],
        ["3", "Alice Babs", "Augustin", "Swedish", "4"],
        ["4", "Bob Benny", "Hou toch van mij", "Dutch", "9"],
        ["5", "Ferry Graf", "Der K und K Kalypso", "German", "4"],
        ["6", "Teddy Scholten", "Een beetje", "Dutch", "21"],
        ["7", "Brita Borg", "Augustin igen", "Swedish", "11"],
        ["8", "Domenico Modugno", "Piove", "Italian", "9"],
        ["9", "Kurt Wege", "Irgendwoher", "German", "5"],
        ["10", "Pearl Carr", "Sing Little Birdie", "English", "16"],
    ],
}

MINES = {
    "id": "south-africa-coal-mines",
    "page_title": "List of Mines in South Africa",
    "table_title": "Coal",
    "header": ["Mine", "Owner", "Province", "Output"],
    "rows": [
        ["Grootegeluk", "Exxaro", "Limpopo", "26,000"],
        ["Leeuwpan", "Exxaro", "Mpumalanga", "4,400"],
        ["Matla", "Exxaro", "Mpumalanga", "14,000"],
        ["Belfast", "Exxaro", "Mpumalanga", "2,700"],
        ["Dorstfontein", "Exxaro", "Mpumalanga", "2,100"],
        ["Forzando", "Exxaro", "Mpumalanga", "2,000"],
        ["Mafube", "Exxaro", "Mpumalanga", "3,600"],
        ["Arnot", "Exxaro", "Mpumalanga", "5,000"],
        ["Tshikondeni", "Exxaro", "Limpopo", "408"],
        ["North Block Complex", "Exxaro", "Mpumalanga", "3,200"],
    ],
}

HAND_TABLES = [CHELSEA, BIRDS, LAUNCHES, ELECTIONS, CONCERTS, EMPLOYERS, EUROVISION, MINES]


def typed(record: dict) -> TypedTable:
    return ingest(raw_table_from_json(record))


def chelsea() -> TypedTable:
    return typed(CHELSEA)
