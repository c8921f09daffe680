/* io: inputs=5 outputs=5 */
#include <stdio.h>
int absolute(int value)
{
    if (value < 0)
        return 0 - value;
    return value;
}
int categorize(int amount)
{
    if (amount > 1000)
        return 3;
    if (amount > 100)
        return 2;
    if (amount > 0)
        return 1;
    return 0;
}
void summary(int credits, int debits, int flagged)
{
    printf("credits %d\n", credits);
    printf("debits %d\n", debits);
    if (flagged > 0)
        printf("flagged %d\n", flagged);
    if (credits == 0)
        printf("no income\n");
}
int main()
{
    int entries, i, amount, credits, debits, flagged, magnitude, bucket;
    scanf("%d", &entries);
    if (entries > 500)
        entries = 500;
    credits = 0;
    debits = 0;
    flagged = 0;
    for (i = 0; i < entries; i = i + 1)
    {
        scanf("%d", &amount);
        magnitude = absolute(amount);
        bucket = categorize(magnitude);
        if (amount > 0)
        {
            credits = credits + amount;
            if (bucket == 3)
            {
                flagged = flagged + 1;
                if (flagged > 10)
                    printf("too many flags\n");
            }
        }
        else
        {
            debits = debits + magnitude;
        }
    }
    if (debits > credits)
        printf("net negative\n");
    summary(credits, debits, flagged);
    printf("entries %d\n", entries);
    return 0;
}
