#pragma once

#include <string_view>

// Bundled factorization seed data (generated; cache JSONL schema).
// Entries are re-verified on load: product reconstruction and a
// primality check per listed factor.

namespace factorchain {

inline constexpr std::string_view kSeedFactorizations =
    R"seed({"n":"31","status":"complete","factors":[["31",1]],"cofactor":"1","source":"general"}
{"n":"781","status":"complete","factors":[["11",1],["71",1]],"cofactor":"1","source":"general"}
{"n":"19531","status":"complete","factors":[["19531",1]],"cofactor":"1","source":"general"}
{"n":"488281","status":"complete","factors":[["19",1],["31",1],["829",1]],"cofactor":"1","source":"general"}
{"n":"12207031","status":"complete","factors":[["12207031",1]],"cofactor":"1","source":"general"}
{"n":"305175781","status":"complete","factors":[["305175781",1]],"cofactor":"1","source":"general"}
{"n":"7629394531","status":"complete","factors":[["11",1],["31",1],["71",1],["181",1],["1741",1]],"cofactor":"1","source":"general"}
{"n":"190734863281","status":"complete","factors":[["409",1],["466344409",1]],"cofactor":"1","source":"general"}
{"n":"4768371582031","status":"complete","factors":[["191",1],["6271",1],["3981071",1]],"cofactor":"1","source":"general"}
{"n":"119209289550781","status":"complete","factors":[["31",1],["379",1],["19531",1],["519499",1]],"cofactor":"1","source":"general"}
{"n":"2980232238769531","status":"complete","factors":[["8971",1],["332207361361",1]],"cofactor":"1","source":"general"}
{"n":"74505805969238281","status":"complete","factors":[["11",1],["71",1],["101",1],["251",1],["401",1],["9384251",1]],"cofactor":"1","source":"general"}
{"n":"1862645149230957031","status":"complete","factors":[["19",1],["31",1],["109",1],["271",1],["829",1],["4159",1],["31051",1]],"cofactor":"1","source":"general"}
{"n":"46566128730773925781","status":"complete","factors":[["59",1],["35671",1],["22125996444329",1]],"cofactor":"1","source":"general"}
{"n":"1164153218269348144531","status":"complete","factors":[["1861",1],["625552508473588471",1]],"cofactor":"1","source":"general"}
{"n":"29103830456733703613281","status":"complete","factors":[["31",1],["199",1],["12207031",1],["386478495679",1]],"cofactor":"1","source":"general"}
{"n":"727595761418342590332031","status":"complete","factors":[["11",1],["71",1],["211",1],["631",1],["4201",1],["19531",1],["85280581",1]],"cofactor":"1","source":"general"}
{"n":"18189894035458564758300781","status":"complete","factors":[["149",1],["13971969971",1],["8737481256739",1]],"cofactor":"1","source":"general"}
{"n":"454747350886464118957519531","status":"complete","factors":[["31",1],["79",1],["305175781",1],["608459012088799",1]],"cofactor":"1","source":"general"}
{"n":"11368683772161602973937988281","status":"complete","factors":[["2238236249",1],["5079304643216687969",1]],"cofactor":"1","source":"general"}
{"n":"284217094304040074348449707031","status":"complete","factors":[["1644512641",1],["172827552198815888791",1]],"cofactor":"1","source":"general"}
{"n":"7105427357601001858711242675781","status":"complete","factors":[["11",1],["19",1],["31",1],["71",1],["181",1],["829",1],["1171",1],["1741",1],["169831",1],["297315901",1]],"cofactor":"1","source":"general"}
{"n":"177635683940025046467781066894531","status":"complete","factors":[["177635683940025046467781066894531",1]],"cofactor":"1","source":"general"}
{"n":"4440892098500626161694526672363281","status":"complete","factors":[["19531",1],["227376585863531112677002031251",1]],"cofactor":"1","source":"general"}
{"n":"111022302462515654042363166809082031","status":"complete","factors":[["31",1],["409",1],["90271",1],["317731",1],["466344409",1],["654652168021",1]],"cofactor":"1","source":"general"}
{"n":"2775557561562891351059079170227050781","status":"complete","factors":[["5960555749",1],["17154094481",1],["27145365052629449",1]],"cofactor":"1","source":"general"}
{"n":"69388939039072283776476979255676269531","status":"complete","factors":[["11",2],["71",1],["103511",1],["511831",1],["12207031",1],["65628751",1],["190295821",1]],"cofactor":"1","source":"general"}
{"n":"1734723475976807094411924481391906738281","status":"complete","factors":[["31",1],["191",1],["6271",1],["3981071",1],["11735415506748076408140121",1]],"cofactor":"1","source":"general"}
{"n":"43368086899420177360298112034797668457031","status":"complete","factors":[["21180247636732981",1],["2047572230657338751575051",1]],"cofactor":"1","source":"general"}
{"n":"1084202172485504434007452800869941711425781","status":"complete","factors":[["8419",1],["918585913061",1],["140194179307171898833699259",1]],"cofactor":"1","source":"general"}
{"n":"27105054312137610850186320021748542785644531","status":"complete","factors":[["19",1],["31",1],["379",1],["829",1],["19531",1],["280729",1],["519499",1],["2161279",1],["23792163643711",1]],"cofactor":"1","source":"general"}
{"n":"677626357803440271254658000543713569641113281","status":"complete","factors":[["11",1],["71",1],["131",1],["305175781",1],["1034150930241911",1],["20986207825565581",1]],"cofactor":"1","source":"general"}
{"n":"993","status":"complete","factors":[["3",1],["331",1]],"cofactor":"1","source":"general"}
{"n":"954305","status":"complete","factors":[["5",1],["11",1],["17351",1]],"cofactor":"1","source":"general"}
{"n":"917087137","status":"complete","factors":[["917087137",1]],"cofactor":"1","source":"general"}
{"n":"881320738689","status":"complete","factors":[["3",2],["331",1],["3637",1],["81343",1]],"cofactor":"1","source":"general"}
{"n":"846949229880161","status":"complete","factors":[["23",1],["397",1],["617",1],["150332843",1]],"cofactor":"1","source":"general"}
{"n":"813918209914834753","status":"complete","factors":[["42407",1],["2426789",1],["7908811",1]],"cofactor":"1","source":"general"}
{"n":"782175399728156197665","status":"complete","factors":[["3",1],["5",1],["11",1],["331",1],["2521",1],["17351",1],["327412201",1]],"cofactor":"1","source":"general"}
{"n":"751670559138758105956097","status":"complete","factors":[["751670559138758105956097",1]],"cofactor":"1","source":"general"}
{"n":"722355407332346539823809249","status":"complete","factors":[["571",1],["14251",1],["88770666332610762169",1]],"cofactor":"1","source":"general"}
{"n":"694183546446385024770680688321","status":"complete","factors":[["3",1],["43",1],["331",1],["6301",1],["917087137",1],["2813432694367",1]],"cofactor":"1","source":"general"}
{"n":"667110388134976008804624141476513","status":"complete","factors":[["1509997",1],["61562537",1],["7176374761323733117",1]],"cofactor":"1","source":"general"}
{"n":"641093082997711944461243799958929025","status":"complete","factors":[["5",2],["11",1],["101",1],["4951",1],["17351",1],["13277801",1],["20235942281002951",1]],"cofactor":"1","source":"general"}
{"n":"616090452760801178627255291760530793057","status":"complete","factors":[["3",3],["331",1],["3637",1],["81343",1],["1836205027201",1],["126901881805771",1]],"cofactor":"1","source":"general"}
{"n":"592062925103129932660792335381870092127809","status":"complete","factors":[["349",1],["10789",1],["49823",1],["1482570191",1],["11242578713",1],["189343400041",1]],"cofactor":"1","source":"general"}
{"n":"568972471024107865287021434301977158534824481","status":"complete","factors":[["568972471024107865287021434301977158534824481",1]],"cofactor":"1","source":"general"}
{"n":"546782544654167658540827598364200049351966326273","status":"complete","factors":[["3",1],["23",1],["331",1],["397",1],["617",1],["150332843",1],["650141690025315305584300036801",1]],"cofactor":"1","source":"general"}
{"n":"525458025412655119857735322027996247427239639548385","status":"complete","factors":[["5",1],["11",1],["17351",1],["319061",1],["203633641",1],["917087137",1],["9240957640390889951861",1]],"cofactor":"1","source":"general"}
{"n":"504965162421561570183283644468904393777577293605998017","status":"complete","factors":[["149",1],["4219",1],["152597832677",1],["257803457371",1],["386626708057",1],["52812493022953",1]],"cofactor":"1","source":"general"}
{"n":"485271521087120668946135582334617122420251779155364094369","status":"complete","factors":[["3",1],["79",2],["331",1],["13807",1],["39703",1],["42407",1],["2426789",1],["7908811",1],["175500339130677572941801",1]],"cofactor":"1","source":"general"}
{"n":"466345931764722962857236294623567054645861959768304894688641","status":"complete","factors":[["83",1],["42481797154433176612759",1],["132259604354473376342663326676479453",1]],"cofactor":"1","source":"general"}
{"n":"448158440425898767305804079133247939514673343337341003795784033","status":"complete","factors":[["146982701137",1],["3049055684506560663410351046998584180840895763387409",1]],"cofactor":"1","source":"general"}
{"n":"430680261249288715380877720047051269873601082947184704647748455745","status":"complete","factors":[["3",2],["5",1],["11",1],["271",1],["331",1],["2521",1],["3637",1],["17351",1],["63901",1],["81343",1],["106291",1],["327412201",1],["337048683633480845467801",1]],"cofactor":"1","source":"general"}
{"n":"413883731060566455481023488965216270348530640712244501166486265970977","status":"complete","factors":[["3128573142495569",1],["170942984502845969696543",1],["773892718948740289245597142031",1]],"cofactor":"1","source":"general"}
{"n":"397742265549204363717263572895572835804937945724466965620993301598108929","status":"complete","factors":[["6959",1],["917087137",1],["62322419393153627851729037464684263699383389269055382039663",1]],"cofactor":"1","source":"general"}
{"n":"382230317192785393532290293552645495208545365841212753961774562835782680801","status":"complete","factors":[["3",1],["331",1],["1961163283",1],["751670559138758105956097",1],["261116663697161542351918133573442849307",1]],"cofactor":"1","source":"general"}
{"n":"367323334822266763184530972104092320895412096573405456557265354885187156249793","status":"partial","factors":[],"cofactor":"367323334822266763184530972104092320895412096573405456557265354885187156249793","source":"general"}
{"n":"352997724764198359420334264192032720380491024807042643751532006044664857156051105","status":"complete","factors":[["5",1],["11",2],["23",1],["397",1],["617",1],["17351",1],["150332843",1],["167767051",1],["236661696642275153056980146191674776616380367693641",1]],"cofactor":"1","source":"general"}
{"n":"339230813498394623402941227888543444285651874839567980645222257808922927726965111937","status":"complete","factors":[["3",1],["331",1],["571",1],["7639",1],["14251",1],["36068660903683",1],["88770666332610762169",1],["1716439847900062900800798410166938893",1]],"cofactor":"1","source":"general"}
{"n":"326000811771957233090226520000890249958511451720824829400058589754374933545613472571489","status":"complete","factors":[["125693727758648407613",1],["2593612406801473161066888689957754830054017617439929433838873336053",1]],"cofactor":"1","source":"general"}
{"n":"313286780112850900999707685720855530210129505103712661053456304753954311137334547141200961","status":"complete","factors":[["14519",1],["50848444051",1],["12712081567468100953",1],["13578586277937589671409",1],["2458422198511222771859601111973397",1]],"cofactor":"1","source":"general"}
{"n":"301068595688449715860719085977742164531934454404667867272371508868550093002978499802694123553","status":"complete","factors":[["3",2],["43",1],["127",1],["331",1],["3637",1],["6301",1],["70309",1],["81343",1],["917087137",1],["75077698123",1],["2813432694367",1],["728921581954037396189325850537700569",1]],"cofactor":"1","source":"general"}
{"n":"289326920456600176942151041624610220115189010682885820448749020022676639375862338310389052734465","status":"complete","factors":[["5",1],["11",1],["911",1],["1951",1],["17351",1],["42407",1],["2426789",1],["7908811",1],["31035996941",1],["5979236519649901",1],["1129363636895809892086303692627113871721",1]],"cofactor":"1","source":"general"}
{"n":"278043170558792770041407151001250421530696639266253273451247808241792250440203707116283879677820897","status":"partial","factors":[],"cofactor":"278043170558792770041407151001250421530696639266253273451247808241792250440203707116283879677820897","source":"general"}
{"n":"267199486906999852009792272112201655090999470334869395786649143720362352673035762538748808370385882049","status":"complete","factors":[["3",1],["139",1],["331",1],["1164859",1],["1509997",1],["61562537",1],["2553526979752336381",1],["7176374761323733117",1],["975573640291548852951234645170717556781",1]],"cofactor":"1","source":"general"}
{"n":"256778706917626857781410373499825790542450490991809489350969827115268220918787367799737604843940832649121","status":"partial","factors":[["17609",1]],"cofactor":"14582242428168939620728625901517734711934266056664744695949220689151469187278514838987881472198354969","source":"general"}
{"n":"246764337347839410327935368933332584711294921843128919266282003857772760302954660455547838255027140175805313","status":"complete","factors":[["30223",1],["122840087453",1],["197340338942587",1],["833039147209543",1],["404318326024801439191676313735836288644493580299053616879363447",1]],"cofactor":"1","source":"general"}
{"n":"237140528191273673325145889544932613907554419891246891414897005707319622651139428697781472563081081708948905825","status":"complete","factors":[["3",1],["5",2],["11",1],["101",1],["151",1],["331",1],["2521",1],["4951",1],["17351",1],["13277801",1],["327412201",1],["20235942281002951",1],["997936488044528101",1],["2994938361626916310097900969699892125851",1]],"cofactor":"1","source":"general"}
{"n":"227892047591814000065465199852680241965159797515488262649716022484734157367744990978567995133120919522299898497857","status":"complete","factors":[["23",1],["397",1],["617",1],["2927",1],["150332843",1],["917087137",1],["23503054499",1],["16169321243923",1],["263768160996144192120004532942855021486760529559458116494001319",1]],"cofactor":"1","source":"general"}
{"n":"219004257735733254062912057058425712528518565412384220406377097607829525230402936330403843322929203660930202456440609","status":"complete","factors":[["317",1],["279977",1],["290879",1],["32846285357",1],["9885529552310437",1],["26125966850815940841819460903165666556867136804500824658834737808083425862291",1]],"cofactor":"1","source":"general"}
{"n":"210463091684039657154458486833147109739906341361301235810528390801124173746417221813518093433334964718153924560639425281","status":"complete","factors":[["3",4],["331",1],["2593",1],["3637",1],["13933",1],["81343",1],["477739",1],["6757669",1],["7822981",1],["1836205027201",1],["126901881805771",1],["124796720050174992115146031610052568212932455637390989",1]],"cofactor":"1","source":"general"}
{"n":"202255031108362110525434605846654372460049994048210487613917783559880330970306950162790887789434901094145921502774487695073","status":"partial","factors":[["167",1],["499",1]],"cofactor":"2427070081580671648991811237404802088728954844397903442980785325859867411113327855264911713120071293414924717732164781","source":"general"}
{"n":"194367084895135988214942656218634851934108044280330278596974990001044998062464979106442043165646939951474230564166282674965185","status":"complete","factors":[["5",1],["11",1],["17351",1],["108971",1],["391206807721",1],["21736504684553261",1],["751670559138758105956097",1],["292415865518548212725264181682005402545390163298379652017348311",1]],"cofactor":"1","source":"general"}
{"n":"186786768584225684674559892626108092708677830553397397731692965391004243138028844921290803482186709293366735572163797650641542817","status":"complete","factors":[["3",1],["331",1],["349",1],["2437",1],["10789",1],["29581",1],["49823",1],["6226417",1],["24589681",1],["1482570191",1],["11242578713",1],["19442411479",1],["189343400041",1],["1480537408333241006942871103432327233924912298742791",1]],"cofactor":"1","source":"general"}
{"n":"179502084609440882972252056813689877093039395161814899220156939740755077655645719969360462146381427630925432884849409542266522647169","status":"complete","factors":[["179",1],["1476511",1],["194382021317865834077",1],["1895009826287880923167",1],["1843793240833772195527188715497235054748361154878687143137366939289518721748165239",1]],"cofactor":"1","source":"general"}
{"n":"172501503309672688536334226597955971886410858750504118150570819090865629627075536890555404122672551953319341002340282570118128263929441","status":"partial","factors":[["2549",1],["42407",1]],"cofactor":"1595825860204603523724253820745764202903640061408547242371455187901543912698295125082704958456690463383542828927027780163851387","source":"general"}
{"n":"165773944680595453683417191760635688982840835259234457542698557146321870071619590951823743361888322427139886703249011549883521261636192833","status":"partial","factors":[["3",1],["331",1]],"cofactor":"166942542477941040970208652326924158089467104994193814242395324417242568047955277897103467635335672132064337062687826334223082841526881","source":"general"}
{"n":"159308760838052230989763921281970897112510042684124313698533313417615317138826426904702617370774677852481431121822300099438063932432381312545","status":"complete","factors":[["5",1],["11",1],["571",1],["14251",1],["17351",1],["793926617318201",1],["88770666332610762169",1],["291085900456038886134880893459441846658670815367779265015895596556789125915380655528060127881",1]],"cofactor":"1","source":"general"}
{"n":"381479493","status":"complete","factors":[["3",1],["127159831",1]],"cofactor":"1","source":"general"}
{"n":"145519152522099305","status":"complete","factors":[["5",1],["191",1],["4760281",1],["32009891",1]],"cofactor":"1","source":"general"}
{"n":"55509730245833052523446637","status":"complete","factors":[["7",1],["631",1],["12567292335484050831661",1]],"cofactor":"1","source":"general"}
{"n":"21174739534695996628104905735620689","status":"complete","factors":[["3",2],["739",1],["72073",1],["127159831",1],["347383020697513453",1]],"cofactor":"1","source":"general"}
{"n":"8077315317090293020613028845818544336752661","status":"complete","factors":[["23",2],["4159",1],["31567260539",1],["116301562592326723759559809",1]],"cofactor":"1","source":"general"}
{"n":"3081172385841965809121618179617816935774440931725753","status":"complete","factors":[["79",1],["573779077",1],["12859742299",1],["9743710678547",1],["542484773057617547",1]],"cofactor":"1","source":"general"}
{"n":"1175343898137553229710865915053903443225657742612909402095165","status":"complete","factors":[["3",1],["5",1],["191",1],["1021",1],["4760281",1],["18212011",1],["32009891",1],["127159831",1],["65424503101",1],["17404018029691",1]],"cofactor":"1","source":"general"}
{"n":"448346637545139027640930953232691320350625116696468458619754959208097","status":"complete","factors":[["103",1],["4352879976166398326610980128472731265540049676664742316696650089399",1]],"cofactor":"1","source":"general"}
{"n":"171026290872449869223487443423835254985987963340655307062821840569077272523749","status":"complete","factors":[["68059",1],["495278418470579",1],["882216833181701",1],["5751121849207819585780202063999542303315009",1]],"cofactor":"1","source":"general"}
{"n":"65239682246179383088446620452445902837380024042395803146627043853428434182895665133321","status":"complete","factors":[["3",1],["7",1],["43",1],["127",1],["631",1],["127159831",1],["12567292335484050831661",1],["564156176126859268755795148922274310461076956421",1]],"cofactor":"1","source":"general"}
{"n":"24886326645279979871922907388371816450956773313391365414876029429874100219698447288825688480013","status":"complete","factors":[["59256204507977681",1],["3035302031019683008546021109",1],["138364619824953525297520160494079932676629423304297",1]],"cofactor":"1","source":"general"}
{"n":"9493137191541761956024497247374924956881129160812111028895359006154626504716261134556002863383908279025","status":"complete","factors":[["5",2],["191",1],["251",1],["16301",1],["4760281",1],["32009891",1],["3188831909058073736344665921823729843552782502269019879967859136132035387494251",1]],"cofactor":"1","source":"general"}
{"n":"3621251742853170045616388435028246226429802211319350601410093519568742586458631288453548604582313980144453637557","status":"complete","factors":[["3",3],["487",1],["739",1],["72073",1],["2568673",1],["17471593",1],["18527563",1],["127159831",1],["882888607",1],["36475229547793",1],["347383020697513453",1],["4371463478104024776122061396469",1]],"cofactor":"1","source":"general"}
{"n":"1381362548599952274327195753386725839432309520767593238959220818981045283849548619406870401015573912155658058948801374809","status":"complete","factors":[["6438764963",1],["19452698081689",1],["11028723756586598750754952481589981746437696424375893070113012395419614425407963845549415707098187",1]],"cofactor":"1","source":"general"}
{"n":"526934503915798399166713393326266056627541051931934806997248054198897593716482746226548626303455184923514749095945473431387541981","status":"partial","factors":[["31",1],["12401",1],["55057",1]],"cofactor":"24895777420516141898157797009687700204280132070097456797597256435342905188025253627911240162655405353782028348218499843","source":"general"}
{"n":"201004415313274804629996923516415110236765601195854826131712769862037362342083353432752136154319589006171724173064145553263627939958142273","status":"partial","factors":[["3",1],["23",2],["3499",1],["4159",1],["7591",1]],"cofactor":"1146560078758172642880636956947462874078314154316484068039476668559242652589793010936361258036492005290207514388323310434009","source":"general"}
{"n":"76675136426229609756441245874691690810727306998312335337864934054774747619553984659206845980093440403830294662359806213246266936694943293091050885","status":"partial","factors":[["5",1],["7",1],["71",2],["191",1],["631",1],["911",1]],"cofactor":"3958117770483520753928972647875555683204914540394256374696127810295378171561247873339480056623990916972807834927875309582397983452641","source":"general"}
{"n":"29248494550819226314737297150151303263684096909211250503800879567801947090739905825495641758499450552800928452522279846072478669067242537479723840041135017","status":"partial","factors":[["593",1],["13099",1],["15541",1]],"cofactor":"242287897611178635463503721654356599724548241882239773148785913154736456841476854165648774106989749863486897224435276516350081054276103367104191","source":"general"}
{"n":"11157129590664214588069863096142127287064108323307944157941113871699427592957707937337240310867171826392870608262939221713893716275722244724556494312861601980573869","status":"complete","factors":[["3",1],["79",1],["127159831",1],["573779077",1],["12859742299",1],["209229782269",1],["9743710678547",1],["542484773057617547",1],["45367179585046709230481736134285045721389475172830035754235119736671968610403895624345538469",1]],"cofactor":"1","source":"general"}
{"n":"4255998218526717260860761041929715125380510565508823769478395137795022653331971144426054132831019241076123192906027073260352250168682072719461776062880908489907230826378641","status":"complete","factors":[["83",1],["1559",1],["2297",1],["2695839049446931",1],["4989920196930879767",1],["1064458354346143330612547915952276146813902465708216380828062292539215148956486179037844128862623941718177692833777605605105010337",1]],"cofactor":"1","source":"general"}
{"n":"1623492914455271043785972733484828496468759670479083860261101599605878967334130232805887976893609419291147551197128564030838112195607706880965053037937284900204581164648394167112533","status":"complete","factors":[["1500529",1],["393102188105041",1],["570716365213661",1],["4822588620237177393819115381687583609989460944188215687470547018654440854215796849078065144313470652141655504923180818978384578605307087688791577",1]],"cofactor":"1","source":"general"}
{"n":"619297543831884028607026451262186072354661701619324180650929266002696206249997592575054948236205150232033792524902165347189509075450140238112360774214488218477928423088111017699374320810745","status":"partial","factors":[["3",2],["5",1],["191",1],["739",1],["1021",1],["1531",1],["72073",1]],"cofactor":"865437093710406310807314808625412925181264385537828282530238189062986859633019492396520931588748482227290466574613888652173789559578357207318810146164456210025131268632343","source":"general"}
{"n":"236237216917506272108959194424441899935152430867901038797460432423147120730972037913774350127039835395510751447231271522154461591530356552674871854549788481455550055631982328375273638140868276100477","status":"partial","factors":[["283",1],["1129",1]],"cofactor":"739380410812615285765129385035200793519867892934743335192845328656796629591752412040344499892145822769174858288648672868370525814865891991959086513127375867995224065926512809970591061043633711","source":"general"}
{"n":"90115039552100482775938962055739024596029148807924726411538743451176836171298885074678884962260960655417950822141534392821451554681167740899451063316559986694283347454923809334721075369543725107425188520929","status":"partial","factors":[["7",2],["197",1],["491",1],["631",1]],"cofactor":"30131733668956177574325658710543407636275391499656430814692356975365816438736332639451639348964127560175348972357359749129067323690745572058065772101375442701699574936878312004162172927699979562433","source":"general"}
{"n":"34375279473057707627790848204162688148579319859134162627881239026874921330007062019930489545227552523438265959314027645965829590012067613877962707534143503178561844643104685566794137356344209967273133223611224043301","status":"partial","factors":[["3",1],["103",1],["9283",1]],"cofactor":"11983933979975125086079975751395332787595280602756182222603812804236899384930961603937771743813831150946231866690940305317068640282378448644148805097024105091905775021502815135435354864964982782416106424002683","source":"general"}
{"n":"13112792767156693702446499472116819058812229558871843169799234951823385442422562007847265764633409921716212518747556572583047162738649301519250713175428786890897577293646772275226554530979705436691820675826541802719861790793","status":"partial","factors":[["107",1]],"cofactor":"122549465113613959835948593197353449147777846344596665138310607026386779835724878578011829576013176838469275876145388528813524885407937397376174889489988662531753058819128712852584621784857060155998324073145250492708988699","source":"general"}
{"n":"5002005417560674460624187293220202385618569793850300499549732542552385489754478249033499692533695728034879480469154699022822839959445815750210617797121251205679101089428983299883802757551891727671949884019786278830388172641287958605","status":"partial","factors":[["5",1],["23",2],["191",1],["4159",1],["7481",1]],"cofactor":"318226644188042596098238299428486368087109159558839267985040912969910432319126938995365149432579629773750977398458203947298147796517163071239201721168343170975193055767383434803637670535944242628288071355517050857455841","source":"general"}
{"n":"1908064791504483594883398520528473966430166594437913668396521493242463809378709172451667080407415563602051733259464013192212738640839442457688528006675778397189552880088637481843326704427437073913964623552142197150974997950606971679232933937","status":"partial","factors":[["3",1],["1483",1],["1597",1],["12541",1],["68059",1]],"cofactor":"314635748032960645237460418752483987913079118932179104597416608723863978775499680568755424701690002844074798618981808181773663385994700850963251627422765850712255264727280118125412027866722032521235349118450215498967011710891","source":"general"}
{"n":"277645755044482440572399753005270639628172555154833455948725438135125311305140425046711887167242660733559991150623134174069294040456083114272420007528927331333713230300113278965907645214846074545744211138770043721446704421929166330443464342829998463742935961","status":"partial","factors":[],"cofactor":"277645755044482440572399753005270639628172555154833455948725438135125311305140425046711887167242660733559991150623134174069294040456083114272420007528927331333713230300113278965907645214846074545744211138770043721446704421929166330443464342829998463742935961","source":"general"}
{"n":"105910738891083825045932427457800170987007757390633119067696023630732813980571725637842139657052785840960025615477045887738240115969909886983115879447604326182392326815465229689917250673257020217222679496970986465951354732367627333173477020920821843609440265708577053","status":"partial","factors":[["3",2],["7",1],["43",1],["127",1],["631",1],["739",1],["72073",1]],"cofactor":"9159692085986437997086916322006890291145032542815740954444739261499046253141319985555608184164640407882853975018649368291787914976348360960542121259110486860485112990586812591643256203868035016482321557865745380763169619547883452480374705882860789203","source":"general"}
{"n":"40400706326874019149752206986687782370497310640928371364871681534034417622449145219513962717735909061833963573838874920731839452846517302662093791032563847808966655873726620714371876535047846675037974849230052115433331604106120560174888550634852884551205182989023440002894465","status":"partial","factors":[["5",1],["79",1],["131",1],["191",1]],"cofactor":"4087777034569343437563303229002856068800669274865150879830226815453188195075543654167356404694578990289570793327415089879624098324143648718579561880179013963356011924537982597339437559543436341325233623931093032782420397661520834921439514922387006008745583632687624927","source":"general"}
{"n":"15411251859821816596777730036805848982226391667693421544637468407977189118917163659919132657262993879026730333351997847546245569141093829259307493705623955115218355999892177662366088162556166725793965559506276559981166171802388188745611139704517506581640231605990744851589962506035397","status":"partial","factors":[],"cofactor":"15411251859821816596777730036805848982226391667693421544637468407977189118917163659919132657262993879026730333351997847546245569141093829259307493705623955115218355999892177662366088162556166725793965559506276559981166171802388188745611139704517506581640231605990744851589962506035397","source":"general"}
{"n":"5878775533408807625955985625508487717331969058729057542373968458045710650191765611943369606593368011836775270917970098197074780500984455606596095435955059398916944586202986095291239158211237019530863796364607435825629808630258298185761464272850799584449726064452196897448457885543724804259049","status":"partial","factors":[["3",1],["139",1]],"cofactor":"14097783053738147784067111811770953758589853857863447343822466326248706595184090196506881550583616335339988659275707669537349593527540660927088957879988152035772049367393252027077312130002966473695117017660929102699352059065367621548588643340169783176138431809237882248077836655980155405897","source":"general"}
{"n":"2242517485701877954053672864423028329822431941195992999680729855421346920839435552853058904339691504653903833210133307857422316083989090897298377907751694956063541124092152213993338372932931303231999542057555094250354749600535793845866938916824559368303008711006618514865009744529651727627389465456621","status":"partial","factors":[],"cofactor":"2242517485701877954053672864423028329822431941195992999680729855421346920839435552853058904339691504653903833210133307857422316083989090897298377907751694956063541124092152213993338372932931303231999542057555094250354749600535793845866938916824559368303008711006618514865009744529651727627389465456621","source":"general"}
{"n":"326312535764165745859918510839999035525690617575606689771371614179055921821678767704853810985170882299932239649366478006578493745824332706237116611327128524829587959602612737971988244781604140823112116275187550062626425356211549395476918405257613072174944943819731401789270852172428222545900484688438159201304796018325","status":"partial","factors":[["3",1],["5",2],["191",1],["251",1],["1021",1],["16301",1]],"cofactor":"5452873422456111982540529924637919696318270483125536660419068221440879008406487909449532098508974357927116711933050414929507977215127702241413806370907930671149023409123606791101734106257282250133651677681609200697686704114112694675035388334077567159955288323825619597838890245632138362765168168148463851","source":"general"}
{"n":"124475167166409770613260426608204109331667557478456842431526514861249718954916631683221594249104656340467742439289990375096789967720893866972234959309298605323482154716082230524897854946849169075822855772960508114575023773949868740148198871269751277464944683446621931557010589488131235047658519599132717359841518638263209804857","status":"partial","factors":[["7",1],["23",2],["631",1],["4159",1]],"cofactor":"12808867304555294843416709444911240880699557693870149208397470238001846146476939710610008685427820609482431630511573234341536250328002274448011059265964586550336113577084905663835454962556027576175789333950988256776048512508779750555769869978338774536624348643114284169013132787195793029398966253129990431208242209111","source":"general"}
{"n":"47482292412767151608153268416808901825697642540697405454113249529438238203803459080133073696621286492553227752649604596174796872312003433380367935660961632924049895122192693728820545277008741108545792606062140279925972100384989745572051075654803342781477977814705747593481928742729550884161652027602901997909168665932657119895568850109","status":"partial","factors":[["317",1]],"cofactor":"149786411396741803180294222135043854339740197289266263262186907032928196226509334637643765604483553604268857263878878852286425464706635436531129134577166034460725221205655185264418123902235776367652342605874259558126094953895866705274609071466256601834315387428093840988901983415550633703979974850482340687410626706412167570648482177","source":"general"}
{"n":"18112593411964753554527233052298455434883451521366373197327227455082778697131577552372658167123281777219181048949835815922258764095058809529141250902880933717704388955365715184280829777366488579924974814222552394757090400299946273331314526009289332600092220939556519703485460392406393513819819300144973919609253560849093413581736017635394005281","status":"partial","factors":[["3",4],["163",1],["487",1],["739",1],["811",1],["1297",1],["1459",1],["72073",1]],"cofactor":"34462429722332357664536277545467145816876016558835624193507041649482349930986513853324334339842130367814346201447390719431232872485043744969075958438053637054217805299059701655119685065284981857482473084827315953689042985212107458767637791920685833954858921591925864729764794602115322393577282245263347499844546275335031","source":"general"}
{"n":"6909229176536931824284569693567679770550879456885807386563889489254006013579442384996549641897178548930039491384343461298108007183609333775692649932904175763599101220442636454932873139921859416405126275559317081824496308571891893727058579170236994451347207196006613363387295285354387565932361231260349045720162998560606300430245891599492709474124073573","status":"partial","factors":[["1163",1]],"cofactor":"5940867735629348086229208678906001522399724382532938423528709792995705944608290958724462288819586026595046854156787155028467761980747492498445958669737038489767068977164777691257844488324900615997529041753497060898105166441867492456628185013101456965904735336205170561811947794801708999081995899621968225038833188788139553250426390025359165497957071","source":"general"}
{"n":"2635594292221840128751250808210109076134827426139361267132173208579143053033779562582530811532661695284889456111931492757381289794047336301311700991392279503519658371185100504835872045572540036029382229274932347219406170712477847477339910254994016264168122054447602089339796487446768552079443443914484727826800594344571935498475881029952716575783699614317730185","status":"partial","factors":[["5",1],["103",1],["191",1],["1361",1]],"cofactor":"19687013398095153547057586306202734145862571083798812025045744868938840363482838327167415095239656968099174300040276393817619696991044849276200044059029941180622489766350667393036111365517915463973977689334747644333165930954036389735884206818170820050874577105308846587628344202484826412800376859033027828857817934130991270075998871258169652628586870829","source":"general"}
{"n":"1005373695922765738861687112001046687988137300716851129525149373989844774423686483625329262648547480509567815817768598861902449266966994937652245709020160275113708245005591962355772061905091344814706740033308751447953136323141141912070030549613517499362937536332822169543077283849381321452250965017325031611906969473457231076943125137126403096842503599313356397978642317","status":"partial","factors":[["3",1],["6961",1]],"cofactor":"48143164101075790780141124934207091317729124202310545875839169371730344032164271590543947835490469784493023790536254315084156934682133550622623459705030899540952365321342334068657379778053504995197372984404000931281575268071691898293828978097664008972031678223091613730933164959506839125233489681431069846856628332780598145713888097357965957805032974156651649570399","source":"general"}
{"n":"727850320952773443429360999188249378623966658337789364867904021347932008269513835153755198877196605002431673689137545353204956785637806727171610043573950167036569351246049330367093612781148673545175062655579843991665233830213615343088299489523615989","status":"partial","factors":[["316636168836007",1]],"cofactor":"2298696082726239370726738335164228753735818551888768767436037535642588297776394641355705277299015010955773161785593905015664391931395738157686563379521695625790845081903348154403893721523350090238597517910463876116300334173617594663427","source":"factordb"}
{"n":"855430632637656421980073842769566674195960025213777783014484223100562634990881173253341288380121452117309474714087956420093310253928151338108894242054223155623895110718088543955962509998799430546557719265292826008091647018785149499548442530401278660475050339083244969422284537412900911364326608024893493871313","status":"partial","factors":[["57276919728938572349117407",1]],"cofactor":"14934997145201908030675513016479350041055430654198977317879832186549473271386136689609124463162966062213105665133311781729507818339406723587743972365634645615135165530209053473386780200489396976307450729687877498909370172721189605605121577433257383409122912758840326434367483412954959","source":"factordb"})seed";

}  // namespace factorchain
